// End-to-end checks through the installed command-line interface. The table
// walks every documented operation through some subcommand and pins the
// expected fragments of the output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SUBSPACEKIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string data_file(const std::string& name) {
    return std::string(SUBSPACEKIT_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("complexity").exit_code == 1); // missing --word
    CHECK(run_cli("heights --rational 0 --product-check").exit_code == 1);
}

TEST_CASE("complexity subcommand") {
    CliResult r = run_cli("complexity --word 0110 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "rho(2)\t3"));
    CHECK(contains(run_cli("complexity --word aaaaaaaaaa --n 3").output, "rho(3)\t1"));
    CliResult table = run_cli("complexity --word 01101001100101101001011001101001 --upto 3");
    CHECK(contains(table.output, "rho(1)\t2"));
    CHECK(contains(table.output, "rho(2)\t4"));
    CHECK(contains(table.output, "rho(3)\t6"));
}

TEST_CASE("repetition subcommand, including oracle and lemma modes") {
    CliResult r = run_cli("repetition --word 0000000000 --lmin 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "k\t1"));
    CHECK(contains(r.output, "n\t6"));
    CHECK(contains(r.output, "length\t5"));

    CHECK(contains(run_cli("repetition --word abcabc --lmin 3").output, "length\t3"));
    CHECK(run_cli("repetition --word abcdef --lmin 1").exit_code == 2);

    CHECK(contains(run_cli("repetition --word aa --oracle").output, "length\t1"));
    CHECK(run_cli("repetition --word ab --oracle").exit_code == 2);

    CliResult lemma = run_cli("repetition --word 0101010101010101010101010101010101010101 "
                              "--lemma-n 4 --kappa 2");
    CHECK(lemma.exit_code == 0);
    CHECK(contains(lemma.output, "prefix-length\t12"));
}

TEST_CASE("automaton subcommand with the bundled machines") {
    CliResult word = run_cli("automaton --machine " + data_file("figure1.json") + " --word 00100");
    CHECK(word.exit_code == 0);
    CHECK(contains(word.output, "output\tb"));

    CliResult prefix = run_cli("automaton --machine figure1 --prefix 5");
    CHECK(contains(prefix.output, "prefix\tbabaa"));

    CliResult tm = run_cli("automaton --machine " + data_file("thue_morse.json") + " --prefix 8");
    CHECK(contains(tm.output, "prefix\t01101001"));
    CHECK(contains(run_cli("automaton --thue-morse-direct 8").output, "thue-morse\t01101001"));
    CHECK(contains(run_cli("automaton --machine tm --term 5").output, "term\t0"));

    CliResult slope = run_cli("automaton --machine tm --slope 1024,16");
    CHECK(slope.exit_code == 0);
    CHECK(contains(slope.output, "slope\t"));
}

TEST_CASE("abl subcommand: digits, word patterns and the pipeline") {
    CHECK(contains(run_cli("abl --alpha 61/495 --base 10 --digits 7").output, "digits\t1232323"));
    CHECK(contains(run_cli("abl --alpha 1/3 --base 10 --digits 5").output, "digits\t33333"));
    CHECK(contains(run_cli("abl --alpha 1/2 --base 10 --digits 3").output, "digits\t500"));

    CliResult pattern = run_cli("abl --word 1232323 --epsilon 1/4");
    CHECK(pattern.exit_code == 0);
    CHECK(contains(pattern.output, "r\t1"));
    CHECK(contains(pattern.output, "s\t2"));
    CHECK(contains(pattern.output, "xi\t61/495"));
    CHECK(contains(pattern.output, "M\t122"));
    CHECK(run_cli("abl --word 0123456 --epsilon 1/7").exit_code == 2);

    CliResult pipe = run_cli("abl --alpha 61/495 --base 10 --lengths 7,9,11 --epsilon 1/4");
    CHECK(pipe.exit_code == 0);
    CHECK(contains(pipe.output, "row0.productValue\t0"));
    CHECK(contains(pipe.output, "plane-found\ttrue"));
    CHECK(contains(pipe.output, "alpha-hat\t61/495"));

    CliResult autopipe = run_cli("abl --alpha 61/495 --base 10");
    CHECK(autopipe.exit_code == 0);
    CHECK(contains(autopipe.output, "alpha-hat\t61/495"));
}

TEST_CASE("heights subcommand") {
    CliResult r = run_cli("heights --rational 61/495 --product-check");
    CHECK(contains(r.output, "height\t495"));
    CHECK(contains(r.output, "product\t1"));

    CHECK(contains(run_cli("heights --rational 12 --valuation 2").output, "valuation\t2"));
    CHECK(contains(run_cli("heights --rational 2006 --valuation 59").output, "valuation\t1"));
    CHECK(contains(run_cli("heights --rational 3 --norm 3").output, "norm\t1/3"));
    CHECK(contains(run_cli("heights --rational 2006 --norm inf").output, "norm\t2006"));
    CHECK(contains(run_cli("heights --vector 4,6,10").output, "height\t5"));

    CliResult s = run_cli("heights --rational 1/10 --s-check 2,5,inf");
    CHECK(contains(s.output, "s-integer\ttrue"));
    CliResult s2 = run_cli("heights --rational 1/3 --s-check 2,5,inf");
    CHECK(contains(s2.output, "s-integer\tfalse"));
}

TEST_CASE("power-sum subcommands") {
    std::string square = data_file("ps_square.json");
    CHECK(contains(run_cli("ps-eval --power-sum " + square + " --n 3").output, "value(3)\t81"));
    CHECK(contains(run_cli("ps-eval --power-sum '{\"terms\":[{\"coeff\":\"2\",\"root\":\"3\"},"
                           "{\"coeff\":\"1\",\"root\":\"3\"},{\"coeff\":\"0\",\"root\":\"5\"}]}' "
                           "--canonical --n 0")
                       .output,
                   "canonical\t3*3^n"));
    CHECK(contains(run_cli("ps-eval --power-sum '{\"terms\":[{\"coeff\":\"1\",\"root\":\"2\"},"
                           "{\"coeff\":\"1\",\"root\":\"1\"}]}' --pow 2 --n 0")
                       .output,
                   "power\t4^n + 2*2^n + 1"));
    CHECK(contains(run_cli("ps-eval --power-sum '{\"terms\":[{\"coeff\":\"1\",\"root\":\"2\"},"
                           "{\"coeff\":\"1\",\"root\":\"3\"}]}' --progression 2,1 --n 0")
                       .output,
                   "progression\t3*9^n + 2*4^n"));

    CliResult root = run_cli("ps-root --power-sum " + square + " --q 2");
    CHECK(root.exit_code == 0);
    CHECK(contains(root.output, "root\t2^n + 1"));
    CliResult noroot = run_cli("ps-root --power-sum '{\"terms\":[{\"coeff\":\"1\",\"root\":\"2\"}]}' --q 2");
    CHECK(noroot.exit_code == 2);
    CHECK(contains(noroot.output, "IrrationalObstruction"));

    CliResult pisot = run_cli("ps-pisot --power-sum '{\"terms\":[{\"coeff\":\"1\",\"root\":\"2\"}]}' --q 2");
    CHECK(pisot.exit_code == 0);
    CHECK(contains(pisot.output, "Q\t2"));
    CHECK(contains(pisot.output, "R\t0"));
    CHECK(contains(pisot.output, "w\t2^n"));
    CliResult pisot2 = run_cli("ps-pisot --power-sum " + square + " --q 2");
    CHECK(contains(pisot2.output, "w\t4^n + 1"));
    CHECK(run_cli("ps-pisot --power-sum " + data_file("ps_2n3n.json") + " --q 2").exit_code == 2);

    CliResult uhs = run_cli("ps-uhs --power-sum " + data_file("ps_2n3n.json"));
    CHECK(uhs.exit_code == 0);
    CHECK(contains(uhs.output, "universal-hilbert-candidate\ttrue"));
    CliResult uhs2 = run_cli("ps-uhs --power-sum '{\"terms\":[{\"coeff\":\"1\",\"root\":\"2\"},"
                             "{\"coeff\":\"1\",\"root\":\"4\"}]}'");
    CHECK(uhs2.exit_code == 2);
    CliResult uhs3 = run_cli("ps-uhs --power-sum '{\"terms\":[{\"coeff\":\"1\",\"root\":\"5\"}]}'");
    CHECK(uhs3.exit_code == 2);
    CHECK(contains(uhs3.output, "fewer than two terms"));

    CliResult dom = run_cli("ps-dominant --roots 8+i,8-i,2+i,2-i --direction upper");
    CHECK(dom.exit_code == 2);
    CHECK(contains(dom.output, "dominant\tfalse"));
    CliResult dom2 = run_cli("ps-dominant --roots 3,2,1 --direction upper");
    CHECK(dom2.exit_code == 0);
    CHECK(contains(dom2.output, "witness\t3"));
    CliResult dom3 = run_cli("ps-dominant --roots 2+i,1 --direction lower");
    CHECK(dom3.exit_code == 0);
    CHECK(contains(dom3.output, "witness\t1"));
}

TEST_CASE("surface subcommands") {
    std::string ones4 = data_file("allones4.json");
    CliResult aut = run_cli("surf-aut --matrix " + ones4 + " --weights 1,1,1,1");
    CHECK(aut.exit_code == 0);
    CHECK(contains(aut.output, "i1.lhs\t14/3"));
    CHECK(contains(aut.output, "criterion\ttrue"));

    CliResult aut3 = run_cli("surf-aut --matrix " + data_file("allones3.json") + " --weights 1,1,1");
    CHECK(aut3.exit_code == 2);
    CHECK(contains(aut3.output, "i1.lhs\t7/2"));

    CliResult cz = run_cli("surf-cz --matrix " + ones4 + " --weights 1,1,1,1");
    CHECK(cz.exit_code == 0);
    CHECK(contains(cz.output, "i1.gamma\t4"));
    CHECK(contains(cz.output, "i1.F(gamma)\t4/3"));

    CliResult cz_et = run_cli("surf-cz --matrix " + ones4 + " --weights 1,1,1,1 --etheta 1,1");
    CHECK(contains(cz_et.output, "cubic-term"));
    CHECK(contains(cz_et.output, "asymptotic"));

    CliResult levin = run_cli("surf-levin --matrix " + ones4);
    CHECK(levin.exit_code == 0);
    CHECK(contains(levin.output, "weights\t1,1,1,1"));

    CliResult screen = run_cli("surf-levin --matrix " + data_file("p1xp1.json") + " --assert-ample");
    CHECK(screen.exit_code == 2);
    CHECK(contains(screen.output, "ScreenFailed"));

    CliResult weights = run_cli("surf-weights --matrix " + ones4 + " --epsilon 1/10");
    CHECK(weights.exit_code == 0);
    CHECK(contains(weights.output, "weights\t1,1,1,1"));
    CHECK(contains(weights.output, "certificate\ttrue"));

    CliResult filt = run_cli("surf-filtration --input " + data_file("filtration_pair.json"));
    CHECK(filt.exit_code == 0);
    CHECK(contains(filt.output, "certificate\ttrue"));
}

TEST_CASE("curve-budget subcommand") {
    CliResult r3 = run_cli("curve-budget --r 3 --g 0 --n 1");
    CHECK(r3.exit_code == 0);
    CHECK(contains(r3.output, "ell\t4"));
    CHECK(contains(r3.output, "A\t2"));
    CHECK(contains(r3.output, "minimal-n\t1"));

    CliResult r2 = run_cli("curve-budget --r 2 --g 0 --n 5");
    CHECK(r2.exit_code == 2);
    CHECK(contains(r2.output, "A\t0"));
    CHECK(contains(r2.output, "has-positive-n\tfalse"));

    CliResult r3g1 = run_cli("curve-budget --r 3 --g 1 --n 1");
    CHECK(contains(r3g1.output, "minimal-n\t2"));
}

TEST_CASE("verify-paper aggregates the bundled reproductions") {
    CliResult r = run_cli("verify-paper");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "all-checks\tpass"));
    CHECK(!contains(r.output, "FAIL"));
}

TEST_CASE("json output is deterministic") {
    CliResult a = run_cli("--format json heights --rational 3/2");
    CliResult b = run_cli("--format json heights --rational 3/2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"inputsDigest\""));
    CHECK(contains(a.output, "\"subcommand\": \"heights\""));
}
