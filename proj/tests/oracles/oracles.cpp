#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

std::string step(const std::string& word) {
    if (word.size() < 3) {
        throw std::logic_error("oracle::step on a short word");
    }
    std::string out = word.substr(3);
    out += word[0] == '1' ? "1101" : "00";
    return out;
}

Trace trace(const std::string& start, std::uint64_t budget, const std::optional<std::string>& target) {
    std::map<std::string, std::uint64_t> seen;
    std::string word = start;
    for (std::uint64_t i = 0;; ++i) {
        if (target && word == *target) {
            return {Kind::Target, i, 0, word};
        }
        if (word.size() < 3) {
            return {Kind::Halted, i, 0, word};
        }
        auto [it, fresh] = seen.emplace(word, i);
        if (!fresh) {
            const std::uint64_t mu = it->second;
            const std::uint64_t period = i - mu;
            return {Kind::Cycled, mu + period, period, word};
        }
        if (i == budget) {
            return {Kind::Budget, i, 0, word};
        }
        word = step(word);
    }
}

std::string full_pass(const std::string& word) {
    std::string w = word;
    std::size_t deleted = 0;
    while (deleted < word.size()) {
        w = step(w);
        deleted += 3;
    }
    return w;
}

std::string g(const std::string& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); i += 3) {
        out += word[i] == '1' ? "1101" : "00";
    }
    return out;
}

std::string cut(const std::string& word, int x) {
    const int r = ((x % 3) + 3) % 3;
    return word.substr(static_cast<std::size_t>(r));
}

namespace {

bool match_tail(const std::string& w, std::size_t i) {
    // {uu0,uu1}* then {e,w,ww}
    if (i + 3 <= w.size() && w[i] == 'u' && w[i + 1] == 'u' && (w[i + 2] == '0' || w[i + 2] == '1') &&
        match_tail(w, i + 3)) {
        return true;
    }
    for (const char* end : {"", "w", "ww"}) {
        if (w.compare(i, std::string::npos, end) == 0) {
            return true;
        }
    }
    return false;
}

void replacements(const std::string& word, std::size_t i, std::string& current, std::vector<std::string>& out) {
    if (i == word.size()) {
        if (in_b(current)) {
            out.push_back(current);
        }
        return;
    }
    std::string options;
    switch (word[i]) {
    case '0': options = "0uvw"; break;
    case '1': options = "1uvw"; break;
    case 'w': options = "uw"; break;
    default: options = std::string(1, word[i]); break;
    }
    for (char c : options) {
        current[i] = c;
        replacements(word, i + 1, current, out);
    }
    current[i] = word[i];
}

int rank(char c) {
    return static_cast<int>(std::string("01uvw").find(c));
}

} // namespace

bool in_b(const std::string& word) {
    for (const char* prefix : {"", "v", "vv"}) {
        const std::string p(prefix);
        if (word.compare(0, p.size(), p) != 0 || word.size() <= p.size()) {
            continue;
        }
        const char lit = word[p.size()];
        if ((lit == '0' || lit == '1') && match_tail(word, p.size() + 1)) {
            return true;
        }
    }
    return false;
}

std::vector<std::string> converting_set(const std::string& word) {
    std::vector<std::string> out;
    std::string current = word;
    replacements(word, 0, current, out);
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](char x, char y) { return rank(x) < rank(y); });
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string expand_literals(const std::string& word) {
    std::string out;
    for (char c : word) {
        if (c == '0') {
            out += "00";
        } else if (c == '1') {
            out += "1101";
        }
    }
    return out;
}

std::vector<std::string> all_words(const std::string& alphabet, std::size_t length) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<std::string> next;
        next.reserve(out.size() * alphabet.size());
        for (const std::string& w : out) {
            for (char c : alphabet) {
                next.push_back(w + c);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::string random_binary(std::mt19937_64& rng, std::size_t length) {
    std::string out(length, '0');
    for (char& c : out) {
        c = (rng() & 1U) ? '1' : '0';
    }
    return out;
}

} // namespace oracle
