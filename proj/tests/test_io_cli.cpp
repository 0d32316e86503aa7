#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "aperimet/errors.hpp"
#include "aperimet/io/csv.hpp"
#include "aperimet/io/runner.hpp"
#include "aperimet/io/window_format.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace aperimet;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("aperimet_tests_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polyomino parse_text(const std::string& text) {
    std::istringstream in(text);
    return io::parse_window_text(in, "<memory>");
}

// Environment override for the worker count; restores on destruction.
struct ThreadsEnv {
    explicit ThreadsEnv(const char* v) { setenv("APERIMET_THREADS", v, 1); }
    ~ThreadsEnv() { unsetenv("APERIMET_THREADS"); }
};

} // namespace

TEST_SUITE("io-cli") {

TEST_CASE("window files round-trip through text") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 50; ++i) {
        Polyomino w = tests::random_polyomino(rng, 1 + static_cast<int>(rng() % 12));
        if (i % 3 == 1) w = w.with_anchor(Rational(-1, 3), Rational(2, 5));
        if (i % 3 == 2) w = w.with_anchor(Rational(0), Rational(-2));
        const Polyomino back = parse_text(io::window_text(w));
        CHECK(back == w);
    }
}

TEST_CASE("parser: comments, blank lines, default anchor") {
    const Polyomino w = parse_text("# a comment\n\ncell 0 0 # trailing comment\ncell 1 0\n");
    CHECK(w.area() == 2);
    CHECK(w.anchor_x() == Rational(-1, 2));
    CHECK(w.anchor_y() == Rational(-1, 2));
    const Polyomino a = parse_text("anchor -1/3 2\ncell 4 -7\ncell 4 -6\n");
    CHECK(a.anchor_x() == Rational(-1, 3));
    CHECK(a.anchor_y() == Rational(2));
    CHECK(a.contains({4, -7}));
}

TEST_CASE("parser rejects malformed input with line numbers") {
    CHECK_THROWS_AS((void)parse_text(""), EmptyWindow);
    CHECK_THROWS_AS((void)parse_text("# only comments\n"), EmptyWindow);
    CHECK_THROWS_AS((void)parse_text("cell 0 0\ncell 0 0\n"), DuplicateCell);
    try {
        (void)parse_text("cell 0 0\ncell 1 0\ncell 0 0\n");
    } catch (const DuplicateCell& e) {
        CHECK(e.line_number == 3);
    }
    CHECK_THROWS_AS((void)parse_text("anchor 0.5 0.5\ncell 0 0\n"), ParseError); // floats
    CHECK_THROWS_AS((void)parse_text("anchor 1/2\ncell 0 0\n"), ParseError);     // arity
    CHECK_THROWS_AS((void)parse_text("anchor 1/0 0\ncell 0 0\n"), ParseError);   // zero den
    CHECK_THROWS_AS((void)parse_text("cell 0 0\nanchor 0 0\n"), ParseError);     // late anchor
    CHECK_THROWS_AS((void)parse_text("cell 0 0 7\n"), ParseError);               // arity
    CHECK_THROWS_AS((void)parse_text("cell 0.5 0\n"), ParseError);               // non-integer
    CHECK_THROWS_AS((void)parse_text("vertex 0 0\n"), ParseError);               // directive
    CHECK_THROWS_AS((void)parse_text("cell 0 0\ncell 2 0\n"), ParseError);       // disconnected
    CHECK_THROWS_AS((void)io::parse_window("/nonexistent/window.win"), ParseError);
}

TEST_CASE("exact rational CLI tokens") {
    CHECK(io::parse_rational_arg("1/4") == Rational(1, 4));
    CHECK(io::parse_rational_arg("-3/6") == Rational(-1, 2));
    CHECK(io::parse_rational_arg("5") == Rational(5));
    CHECK(io::parse_rational_arg("-2") == Rational(-2));
    CHECK(io::parse_rational_arg("0.25") == Rational(1, 4));
    CHECK(io::parse_rational_arg("-0.5") == Rational(-1, 2));
    CHECK(io::parse_rational_arg("2.5") == Rational(5, 2));
    CHECK_THROWS_AS((void)io::parse_rational_arg("1/0"), Error);
    CHECK_THROWS_AS((void)io::parse_rational_arg("1/-2"), Error);
    CHECK_THROWS_AS((void)io::parse_rational_arg("abc"), Error);
    CHECK_THROWS_AS((void)io::parse_rational_arg("1.2.3"), Error);
    CHECK_THROWS_AS((void)io::parse_rational_arg(""), Error);
}

TEST_CASE("csv: 17-digit floats round-trip") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(1.0) == "1");
    CHECK(std::stod(io::format_double(14.0625)) == 14.0625);
    const double tricky = 0x1.fffffffffffffp-2;
    CHECK(std::stod(io::format_double(tricky)) == tricky);
}

TEST_CASE("covariogram run writes deterministic outputs") {
    const fs::path dir1 = fresh_dir("cov1");
    const fs::path dir2 = fresh_dir("cov2");
    const fs::path win = dir1 / "w.win";
    io::write_window(tests::reference_left_window(), win.string());

    io::RunConfig c;
    c.command = io::RunConfig::Command::covariogram;
    c.window_path = win.string();
    c.step = "1/4";
    c.out_dir = (dir1 / "out").string();
    REQUIRE(io::run(c) == 0);
    c.out_dir = (dir2 / "out").string();
    REQUIRE(io::run(c) == 0);

    for (const char* name : {"grid.csv", "covariogram.svg", "meta.txt"}) {
        const std::string a = slurp(dir1 / "out" / name);
        CHECK(a == slurp(dir2 / "out" / name));
        CHECK(!a.empty());
    }
    const std::string grid = slurp(dir1 / "out" / "grid.csv");
    CHECK(grid.rfind("vx,vy,g\n", 0) == 0);
    const std::string meta = slurp(dir1 / "out" / "meta.txt");
    CHECK(meta.find("tool aperimet\n") != std::string::npos);
    CHECK(meta.find("command covariogram\n") != std::string::npos);
    CHECK(meta.find("step 1/4\n") != std::string::npos);
}

TEST_CASE("outputs are identical across worker counts") {
    const fs::path dir = fresh_dir("threads");
    const fs::path win = dir / "w.win";
    io::write_window(tests::reference_left_window(), win.string());

    io::RunConfig c;
    c.command = io::RunConfig::Command::diffract;
    c.window_path = win.string();
    c.k_max = 2.0;
    c.intensity_min = 1e-3;

    std::string one, four;
    {
        ThreadsEnv env("1");
        c.out_dir = (dir / "t1").string();
        REQUIRE(io::run(c) == 0);
        one = slurp(dir / "t1" / "peaks.csv");
    }
    {
        ThreadsEnv env("4");
        c.out_dir = (dir / "t4").string();
        REQUIRE(io::run(c) == 0);
        four = slurp(dir / "t4" / "peaks.csv");
    }
    CHECK(one == four);
    CHECK(one.rfind("n1,n2,n3,n4,kx,ky,intensity\n", 0) == 0);
    // The origin row carries the squared density 225/16.
    CHECK(one.find("\n0,0,0,0,0,0,14.0625\n") != std::string::npos);
}

TEST_CASE("patch and autocorr runs write their tables") {
    const fs::path dir = fresh_dir("patch");
    const fs::path win = dir / "w.win";
    io::write_window(tests::reference_left_window(), win.string());

    io::RunConfig c;
    c.command = io::RunConfig::Command::patch;
    c.window_path = win.string();
    c.radius = 8.0;
    c.out_dir = (dir / "p").string();
    REQUIRE(io::run(c) == 0);
    const std::string patch = slurp(dir / "p" / "patch.csv");
    CHECK(patch.rfind("n1,n2,n3,n4,x,y,xstar,ystar\n", 0) == 0);
    CHECK(slurp(dir / "p" / "meta.txt").find("density ") != std::string::npos);

    c.command = io::RunConfig::Command::autocorr;
    c.max_offset = 4.0;
    c.out_dir = (dir / "a").string();
    REQUIRE(io::run(c) == 0);
    const std::string rows = slurp(dir / "a" / "autocorr.csv");
    CHECK(rows.rfind("n1,n2,n3,n4,dx,dy,eta,empirical\n", 0) == 0);
    CHECK(rows.find("\n0,0,0,0,0,0,3.75,") != std::string::npos);
}

TEST_CASE("homometry run reports the verdict") {
    const fs::path dir = fresh_dir("hom");
    const fs::path w1 = dir / "left.win", w2 = dir / "right.win";
    io::write_window(tests::reference_left_window(), w1.string());
    io::write_window(tests::reference_right_window(), w2.string());

    io::RunConfig c;
    c.command = io::RunConfig::Command::homometry;
    c.window_path = w1.string();
    c.window2_path = w2.string();
    c.radius = 10.0;
    c.out_dir = (dir / "out").string();
    REQUIRE(io::run(c) == 0);
    const std::string verdict = slurp(dir / "out" / "homometry.txt");
    CHECK(verdict.find("homometric true") != std::string::npos);
    CHECK(verdict.find("congruent false") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "difference.svg"));
}

TEST_CASE("reconstruct run emits windows that parse back to the fixtures") {
    const fs::path dir = fresh_dir("rec");
    io::RunConfig c;
    c.command = io::RunConfig::Command::reconstruct;
    c.out_dir = (dir / "out").string();
    REQUIRE(io::run(c) == 0);
    CHECK(io::parse_window((dir / "out" / "left.win").string()).cells() ==
          tests::reference_left_cells());
    CHECK(io::parse_window((dir / "out" / "right.win").string()).cells() ==
          tests::reference_right_cells());
    const std::string cert = slurp(dir / "out" / "certificate.txt");
    CHECK(cert.rfind("# shared difference count map", 0) == 0);
    CHECK(cert.find("0 0 15\n") != std::string::npos);
}

TEST_CASE("1D search run lists the frozen pair") {
    const fs::path dir = fresh_dir("search1d");
    io::RunConfig c;
    c.command = io::RunConfig::Command::search;
    c.one_d = true;
    c.points_1d = 6;
    c.span_1d = 11;
    c.out_dir = (dir / "out").string();
    REQUIRE(io::run(c) == 0);
    CHECK(slurp(dir / "out" / "pairs.txt") == "0 1 2 6 8 11 | 0 1 6 7 9 11\n");
}

TEST_CASE("failures return exit status 1") {
    const fs::path dir = fresh_dir("fail");
    io::RunConfig c;
    c.command = io::RunConfig::Command::covariogram;
    c.window_path = (dir / "missing.win").string();
    c.out_dir = (dir / "out").string();
    CHECK(io::run(c) == 1);

    const fs::path win = dir / "w.win";
    io::write_window(Polyomino({{0, 0}}), win.string());
    c.window_path = win.string();
    c.step = "abc";
    CHECK(io::run(c) == 1);

    io::RunConfig h;
    h.command = io::RunConfig::Command::homometry;
    h.window_path = win.string();
    h.out_dir = (dir / "out").string();
    CHECK(io::run(h) == 1); // missing --window2

    io::RunConfig s;
    s.command = io::RunConfig::Command::search;
    s.one_d = true;
    s.points_1d = 12;
    s.span_1d = 200;
    s.out_dir = (dir / "out").string();
    CHECK(io::run(s) == 1); // budget exceeded surfaces as failure
}

} // TEST_SUITE
