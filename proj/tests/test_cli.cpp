#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the CLI through the shell so env-var prefixes work.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = "unit_cli_out.txt";
    const std::string err_path = "unit_cli_err.txt";
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + EXPDIOPH_CLI_PATH +
                            " " + args + " > " + out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace

TEST_CASE("certify: single family") {
    const auto res = run_cli("certify --ell 11 --m 1 --r 3 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"verdict\": \"certified-unique\"") != std::string::npos);
    CHECK(res.out.find("\"a\": \"32\"") != std::string::npos);
}

TEST_CASE("certify: text format includes the step transcript for one family") {
    const auto res = run_cli("certify --ell 11 --m 1 --r 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("verdict=certified-unique") != std::string::npos);
    CHECK(res.out.find("[pass] oracle_search") != std::string::npos);
}

TEST_CASE("certify: usage errors exit 1") {
    CHECK(run_cli("certify --ell 11 --m 1 --r 3 --zmax 1").exit_code == 1);
    CHECK(run_cli("certify --ell 5..x --m 1 --r 3").exit_code == 1);
    CHECK(run_cli("certify --ell 9..5 --m 1 --r 3").exit_code == 1);
    CHECK(run_cli("certify --m 1 --r 3").exit_code == 1);  // missing --ell
    CHECK(run_cli("nosuchcommand").exit_code == 1);
    CHECK(run_cli("certify --ell 11 --m 1 --r 3 --format yaml").exit_code == 1);
}

TEST_CASE("certify: bad EXPDIOPH_THREADS is a usage error") {
    CHECK(run_cli("certify --ell 11 --m 1 --r 3", "EXPDIOPH_THREADS=abc").exit_code == 1);
    CHECK(run_cli("certify --ell 11 --m 1 --r 3", "EXPDIOPH_THREADS=0").exit_code == 1);
}

TEST_CASE("certify: grid output is byte-identical across thread counts") {
    const auto one = run_cli("certify --ell 5..25 --m 1..4 --r 3..24 --format json",
                             "EXPDIOPH_THREADS=1");
    const auto four = run_cli("certify --ell 5..25 --m 1..4 --r 3..24 --format json",
                              "EXPDIOPH_THREADS=4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("certify: --out writes a file") {
    const std::string path = "unit_cli_report.csv";
    const auto res = run_cli("certify --ell 11 --m 1 --r 3..6 --format csv --out " + path);
    CHECK(res.exit_code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.find("11,1,3,ok,") != std::string::npos);
    CHECK(csv.find("11,1,4,skipped,") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("corollary: mapping errors become skip reasons") {
    const auto small = run_cli("corollary --p 7 --m 1");
    CHECK(small.exit_code == 0);
    CHECK(small.out.find("skipped: p < 11") != std::string::npos);

    const auto bad_m = run_cli("corollary --p 13 --m 3");
    CHECK(bad_m.exit_code == 0);
    CHECK(bad_m.out.find("skipped: 3 | m") != std::string::npos);

    const auto ok = run_cli("corollary --p 11 --m 1 --format json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"verdict\": \"certified-unique\"") != std::string::npos);
}

TEST_CASE("lehmer: values, primitive parts and pair errors") {
    const auto fib = run_cli("lehmer --e 1 --g -1 --n 12 --primitive");
    CHECK(fib.exit_code == 0);
    CHECK(fib.out.find("L_12 = 144 primitive_part=1 has_primitive_divisor=false") !=
          std::string::npos);

    const auto fam = run_cli("lehmer --e 128 --g 121 --n 3");
    CHECK(fam.exit_code == 0);
    CHECK(fam.out.find("L_3 = 7") != std::string::npos);

    const auto bad = run_cli("lehmer --e 2 --g 4 --n 5");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("gcd(E,G) != 1") != std::string::npos);

    const auto json = run_cli("lehmer --e 1 --g -1 --n 12..13 --primitive --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"has_primitive_divisor\": false") != std::string::npos);
    CHECK(json.out.find("\"value\": \"233\"") != std::string::npos);
}

TEST_CASE("quadform: enumerate, classes, represent") {
    const auto enumerated = run_cli("quadform --d1 2 --d2 3 --k 5 --zmax 3 enumerate");
    CHECK(enumerated.exit_code == 0);
    CHECK(enumerated.out.find("(1,1,1)") != std::string::npos);
    CHECK(enumerated.out.find("(7,3,3)") != std::string::npos);

    const auto classes = run_cli("quadform --d1 2 --d2 3 --k 5 --zmax 3 classes");
    CHECK(classes.exit_code == 0);
    CHECK(classes.out.find("class +-2: (1,1,1) (7,3,3)") != std::string::npos);

    const auto rep = run_cli("quadform --d1 2 --d2 3 --k 5 --zmax 3 represent");
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("(7,3,3): least=(1,1,1) t=3 lambda1=-1 lambda2=-1") != std::string::npos);

    const auto bad = run_cli("quadform --d1 2 --d2 4 --k 5 --zmax 3 enumerate");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("gcd(d1, d2) != 1") != std::string::npos);

    CHECK(run_cli("quadform --d1 2 --d2 3 --k 5 --zmax 3 nonsense").exit_code == 1);
}
