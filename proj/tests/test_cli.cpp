#include "cli.hpp"

#include "posttag/constants.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = posttag::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("posttag_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST_CASE("simulate") {
    TempDir tmp;
    const std::string b = tmp.write("b.txt", posttag::growth_core().to_string() + "\n");
    const std::string abc = tmp.write(
        "abc.txt", (posttag::growth_prefix() + posttag::growth_core() + posttag::growth_suffix()).to_string());
    const Result r = invoke({"simulate", "--word", "@" + b, "--target", "@" + abc, "--budget", "20000"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "TargetReached 10444");

    CHECK(first_line(invoke({"simulate", "--word", "0", "--budget", "5"}).out) == "Halted 0");
    CHECK(first_line(invoke({"simulate", "--word", "01", "--budget", "5"}).out) == "Halted 0");
    CHECK(invoke({"simulate", "--word", "100100100", "--budget", "5"}).code == 2);
    CHECK(invoke({"simulate", "--word", "12", "--budget", "5"}).code == 1);
    CHECK(invoke({"simulate", "--word", "@" + (tmp.path / "missing").string(), "--budget", "5"}).code == 1);
}

TEST_CASE("unknown flags and commands") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"simulate", "--word", "0", "--budget", "5", "--bogus"}).code == 1);
    CHECK(invoke({"simulate", "--word", "0", "--budget", "0"}).code == 1);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verify-theorem") {
    const Result r = invoke({"verify-theorem", "0", "0", "20000"});
    CHECK(r.code == 0);
    CHECK(r.out.find("10444") != std::string::npos);
    CHECK(invoke({"verify-theorem", "0", "0", "1"}).code == 2);
    CHECK(invoke({"verify-theorem", "--n-max", "1", "--m-max", "0"}).code == 0);
}

TEST_CASE("verify-omega") {
    TempDir tmp;
    const Result plain = invoke({"verify-omega"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("closure_ok = true") != std::string::npos);

    const std::string cert = (tmp.path / "cert.txt").string();
    CHECK(invoke({"verify-omega", "--emit", cert}).code == 0);
    std::ifstream in(cert);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == plain.out);
    CHECK(invoke({"verify-omega", "--check", cert}).code == 0);

    std::string tampered = text.str();
    tampered.replace(tampered.find("closure_ok = true"), 17, "closure_ok = fals");
    const std::string bad = tmp.write("bad.txt", tampered);
    CHECK(invoke({"verify-omega", "--check", bad}).code == 1);

    std::string flipped = text.str();
    flipped.replace(flipped.find("step.4.checks.e_ok = pass"), 25, "step.4.checks.e_ok = fail");
    const Result rejected = invoke({"verify-omega", "--check", tmp.write("flip.txt", flipped)});
    CHECK(rejected.code == 3);
    CHECK(rejected.err.find("FAIL") != std::string::npos);

    const Result x1 = invoke({"verify-omega", "--seed-x", "1"});
    CHECK(x1.code == 3);
    CHECK_FALSE(x1.err.empty());
    CHECK(invoke({"verify-omega", "--seed-x", "3"}).code == 1);
}

TEST_CASE("blockset") {
    CHECK(invoke({"blockset", "0000"}).out == "0uu0\nv0ww\nvv0w\n");
    CHECK(invoke({"blockset", "10101"}).out == "1uu0w\nv0uu1\nvv1ww\n");
    const Result empty = invoke({"blockset", "w1v"});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
    CHECK(invoke({"blockset", "0a"}).code == 1);
}

TEST_CASE("block-search") {
    TempDir tmp;
    const Result one = invoke({"block-search", "2", "100", "1"});
    CHECK(one.code == 0);
    CHECK(invoke({"block-search", "2", "100", "8"}).out == one.out);
    const std::string path = (tmp.path / "search.txt").string();
    CHECK(invoke({"block-search", "--max-rows", "2", "--budget", "100", "--output", path}).code == 0);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == one.out);
    const Result tiny = invoke({"block-search", "1", "10", "1"});
    CHECK(tiny.code == 0);
    CHECK(tiny.out.find("cond_ii = false") == std::string::npos);
    CHECK(invoke({"block-search", "2", "0"}).code == 1);
}

TEST_CASE("decode") {
    CHECK(invoke({"decode", "ZZOOOZ"}).out == posttag::growth_prefix().to_string() + "\n");
    CHECK(invoke({"decode", "--to-tokens", posttag::growth_prefix().to_string()}).out == "ZZOOOZ\n");
    CHECK(invoke({"decode", "010"}).code == 1);
    CHECK(invoke({"decode", "--to-tokens", "010"}).code == 1);
}
