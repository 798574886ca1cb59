#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "genusgate/cli.hpp"

using namespace genusgate;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string db = GENUSGATE_TEST_DATA;

} // namespace

TEST(Cli, ZetaQuad) {
    EXPECT_EQ(run({"zeta-quad", "5"}).out, "1/60\n");
    EXPECT_EQ(run({"zeta-quad", "498"}).out, "560/3\n");
    const CliResult list = run({"zeta-quad", "--disc-max", "12"});
    EXPECT_EQ(list.code, 0);
    EXPECT_EQ(list.out, "2\t1/24\n3\t1/12\n5\t1/60\n6\t1/4\n7\t1/3\n10\t7/12\n11\t7/12\n");
    EXPECT_EQ(run({"zeta-quad", "4"}).code, 2);
    EXPECT_EQ(run({"zeta-quad"}).code, 2);
    EXPECT_EQ(run({"zeta-quad", "5", "--disc-max", "9"}).code, 2);
}

TEST(Cli, Bounds) {
    const CliResult r = run({"bounds", "212"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("inequality_cap\t12\n"), std::string::npos);
    EXPECT_NE(r.out.find("refined_cap\t-\n"), std::string::npos);
    EXPECT_NE(run({"bounds", "212", "--db", db}).out.find("refined_cap\t10\n"), std::string::npos);
    EXPECT_EQ(run({"bounds", "1"}).code, 2);
}

TEST(Cli, Factor) {
    const CliResult r = run({"factor", "--poly", "95,0,-20,0,1", "--prime", "2", "--db", db});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("splitting-from=override"), std::string::npos);
    EXPECT_NE(r.out.find("\ne=2 f=2 norm=4\n"), std::string::npos);

    const CliResult clean = run({"factor", "--poly", "-1,-1,1", "--prime", "11", "--db", db});
    EXPECT_NE(clean.out.find("splitting-from=dedekind"), std::string::npos);
    EXPECT_NE(clean.out.find("e=1 f=1 norm=11\ne=1 f=1 norm=11\n"), std::string::npos);

    // no row, no override: the index-divisible prime is refused
    const CliResult refused = run({"factor", "--poly", "95,0,-20,0,1", "--prime", "2", "--disc", "38000", "--db", "/dev/null"});
    EXPECT_EQ(refused.code, 2);
    EXPECT_NE(refused.err.find("NeedsOverride"), std::string::npos) << refused.err;
    EXPECT_EQ(run({"factor", "--poly", "1,2", "--prime", "2"}).code, 2);
    EXPECT_EQ(run({"factor", "--poly", "-1,-1,1", "--prime", "2", "--db", "/nonexistent"}).code, 2);
}

TEST(Cli, FieldVerdict) {
    const CliResult r = run({"field-verdict", "--poly", "29,-25,-1,1", "--zeta", "211/3", "--disc", "13396", "--genus", "212",
                       "--db", db});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("3:13396\t211/3\t3\tRuledOut\tNormUnavailable\t-\n"), std::string::npos) << r.out;

    const CliResult q = run({"field-verdict", "--poly", "0,1", "--zeta", "1/12", "--disc", "1", "--genus", "2"});
    EXPECT_EQ(q.code, 1);
    EXPECT_NE(q.out.find("13^1:1,2^1:1"), std::string::npos);

    const CliResult bad = run({"field-verdict", "--poly", "-1,-1,1", "--zeta", "1/30", "--disc", "5", "--genus", "212"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("ZagierMismatch"), std::string::npos) << bad.err;
}

TEST(Cli, ProveAndReportFile) {
    const CliResult r = run({"prove", "212", "--db", db});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("# status=AllRuledOut"), std::string::npos);
    EXPECT_EQ(run({"prove", "2", "--db", db, "--workers", "2"}).code, 1);

    const std::string path = ::testing::TempDir() + "genusgate_report.tsv";
    const CliResult f = run({"prove", "212", "--db", db, "--report", path});
    EXPECT_EQ(f.code, 0);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), r.out);
    std::remove(path.c_str());

    EXPECT_EQ(run({"prove", "212", "--db", "/nonexistent"}).code, 2);
    EXPECT_EQ(run({"prove", "212", "--db", db, "--cap", "10"}).code, 2);
}

TEST(Cli, ValidateDb) {
    const CliResult r = run({"validate-db", db});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("ok\trecords=", 0), 0u);
    EXPECT_NE(r.out.find("irreducibility-unverified=0"), std::string::npos);

    const std::string path = ::testing::TempDir() + "genusgate_bad.tsv";
    {
        std::ofstream out(path);
        out << "2\t5\t-1,-1,1\t1/60\n2\t5\t-1,-1,1\t1/60\n";
    }
    const CliResult dup = run({"validate-db", path});
    EXPECT_EQ(dup.code, 2);
    EXPECT_NE(dup.err.find("DuplicateField"), std::string::npos) << dup.err;
    std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    const CliResult v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find(version), std::string::npos);
}
