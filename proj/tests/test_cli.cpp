#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include <cli_app.hpp>

using namespace charvar;

namespace
{

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test
{
protected:
    void SetUp() override
    {
        std::random_device rd;
        dir = fs::temp_directory_path() / ("charvar-cli-" + std::to_string(rd()) + std::to_string(rd()));
    }
    void TearDown() override
    {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::vector<std::string> with_cache(std::vector<std::string> a) const
    {
        a.push_back("--cache-dir");
        a.push_back(dir.string());
        return a;
    }
    fs::path dir;
};

} // namespace

TEST_F(CliTest, ComputeEText)
{
    const auto r = run(with_cache({"compute", "--kind", "E", "--n", "2", "--g", "3", "--format", "text"}));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 - 4*q^2 + 6*q^4 - 14*q^6 + 6*q^8 - 4*q^10 + q^12\n");
}

TEST_F(CliTest, ComputeRankOneIsOne)
{
    const auto r = run(with_cache({"compute", "--kind", "hqt", "--n", "1", "--g", "5", "--format", "text"}));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
    const auto j = run(with_cache({"compute", "--kind", "hqt", "--n", "1", "--g", "5"}));
    EXPECT_EQ(j.code, 0);
    const auto doc = json::parse(j.out);
    EXPECT_EQ(doc.at("terms"), json::parse(R"([{"c":"1","e":[0,0]}])"));
}

TEST_F(CliTest, ComputePureText)
{
    const auto r = run(with_cache({"compute", "--kind", "pp", "--n", "2", "--g", "3", "--format", "text"}));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 + t^4 + t^8\n");
}

TEST_F(CliTest, ComputeJsonSchema)
{
    const auto r = run(with_cache({"compute", "--kind", "hxy", "--n", "2", "--g", "2"}));
    ASSERT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("kind"), "hxy");
    EXPECT_EQ(doc.at("vars"), json({"q", "x", "y"}));
    EXPECT_EQ(doc.at("version"), 1);
    EXPECT_EQ(doc.at("meta").at("dim2N"), 6);
    EXPECT_TRUE(doc.at("terms")[0].at("c").is_string());
    EXPECT_EQ(result_from_document(doc).polynomial, invariant_polynomial(Kind::Hxy, 2, 2));
}

TEST_F(CliTest, CacheTransparency)
{
    const std::vector<std::string> args{"compute", "--kind", "hqt", "--n", "3", "--g", "2"};
    const auto cold = run(with_cache(args));
    ASSERT_TRUE(fs::exists(dir / "hqt_n3_g2.json"));
    const auto warm = run(with_cache(args));
    auto nocache = args;
    nocache.push_back("--no-cache");
    const auto bypass = run(nocache);
    EXPECT_EQ(cold.code, 0);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(cold.out, bypass.out);
    auto text = args;
    text.insert(text.end(), {"--format", "text"});
    EXPECT_EQ(run(with_cache(text)).out, run(with_cache(text)).out);
}

TEST_F(CliTest, CacheUsesEnvironment)
{
    ::setenv("CHARVAR_CACHE_DIR", dir.c_str(), 1);
    EXPECT_EQ(run({"compute", "--kind", "E", "--n", "2", "--g", "2"}).code, 0);
    EXPECT_EQ(run({"cache", "--list"}).out, "E/2/2\n");
    ::unsetenv("CHARVAR_CACHE_DIR");
}

TEST_F(CliTest, CacheListAndClear)
{
    auto empty = run(with_cache({"cache", "--list"}));
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.out, "");
    EXPECT_EQ(run(with_cache({"cache", "--list", "--format", "json"})).out, "[]\n");

    run(with_cache({"compute", "--kind", "E", "--n", "2", "--g", "3"}));
    EXPECT_EQ(run(with_cache({"cache", "--list"})).out, "E/2/3\n");
    run(with_cache({"compute", "--kind", "pp", "--n", "2", "--g", "2"}));
    run(with_cache({"compute", "--kind", "E", "--n", "1", "--g", "4"}));
    const auto listed = run(with_cache({"cache", "--list"}));
    EXPECT_EQ(listed.out, "E/1/4\nE/2/3\npp/2/2\n");
    EXPECT_EQ(run(with_cache({"cache", "--list"})).out, listed.out);
    const auto js = json::parse(run(with_cache({"cache", "--list", "--format", "json"})).out);
    ASSERT_EQ(js.size(), 3u);
    EXPECT_EQ(js[1], json({{"kind", "E"}, {"n", 2}, {"g", 3}, {"file", "E_n2_g3.json"}}));

    const auto cleared = run(with_cache({"cache", "--clear"}));
    EXPECT_EQ(cleared.code, 0);
    EXPECT_EQ(run(with_cache({"cache", "--list"})).out, "");
}

TEST_F(CliTest, CacheUnwritable)
{
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    const auto r = run({"cache", "--clear", "--cache-dir", (dir / "file" / "sub").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    EXPECT_EQ(run({"cache", "--cache-dir", dir.string()}).code, 2);
}

TEST_F(CliTest, ComputeWithUnwritableCacheStillAnswers)
{
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    const auto r = run({"compute", "--kind", "E", "--n", "2", "--g", "3", "--format", "text", "--cache-dir",
                        (dir / "file" / "sub").string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 - 4*q^2 + 6*q^4 - 14*q^6 + 6*q^8 - 4*q^10 + q^12\n");
    EXPECT_NE(r.err.find("warning:"), std::string::npos);
}

TEST_F(CliTest, CheckEuler)
{
    const auto r = run({"check", "--suite", "euler", "--n", "2", "--g", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS euler"), std::string::npos);
    EXPECT_NE(r.out.find("-8"), std::string::npos);
    EXPECT_NE(r.out.find("result: pass"), std::string::npos);
}

TEST_F(CliTest, CheckClosedFormRankThree)
{
    const auto r = run({"check", "--suite", "closedform", "--n", "3", "--g", "2"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS closed_form[H3]"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("PASS closed_form[PP3]"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckDualityRankFour)
{
    const auto r = run({"check", "--suite", "duality", "--n", "4", "--g", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS duality[hqt]"), std::string::npos);
}

TEST_F(CliTest, CheckAllJson)
{
    const auto r = run({"check", "--suite", "all", "--n", "2", "--g", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_TRUE(doc.at("passed").get<bool>());
    std::set<std::string> names;
    for (const auto &c : doc.at("checks")) {
        names.insert(c.at("name").get<std::string>());
        EXPECT_TRUE(c.at("passed").get<bool>()) << c.dump();
    }
    for (const char *want : {"duality[E]", "duality[hqt]", "degrees[hqt]", "positivity[hqt]", "euler",
                             "closed_form[E2]", "closed_form[H2]", "pp_properties", "specialization_pure"}) {
        EXPECT_TRUE(names.count(want)) << want;
    }
}

TEST_F(CliTest, CheckUsageErrors)
{
    EXPECT_EQ(run({"check", "--suite", "duality", "--n", "2", "--g", "1"}).code, 2);
    EXPECT_EQ(run({"check", "--suite", "bogus", "--n", "2", "--g", "2"}).code, 2);
    EXPECT_EQ(run({"check", "--suite", "closedform", "--n", "5", "--g", "2"}).code, 2);
}

TEST_F(CliTest, CountBothAgree)
{
    const auto r = run({"count", "--family", "sl", "--q", "3", "--g", "1", "--zeta-order", "2", "--oracle", "both"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("brute: 24\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("character: 24\n"), std::string::npos);
    EXPECT_NE(r.out.find("agreement: true"), std::string::npos);
}

TEST_F(CliTest, CountCharacterBridge)
{
    const auto r = run({"count", "--family", "gl", "--q", "3", "--g", "2", "--zeta-order", "2", "--oracle", "character"});
    EXPECT_EQ(r.code, 0);
    const SparsePoly e2 = invariant_polynomial(Kind::E, 2, 2);
    const Rational want = Rational(24 * 16) * evaluate(e2, {{'q', Rational(3)}});
    EXPECT_NE(r.out.find("character: " + want.get_str() + "\n"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("brute:"), std::string::npos);
    EXPECT_EQ(r.out.find("agreement:"), std::string::npos);
}

TEST_F(CliTest, CountJson)
{
    const auto r = run({"count", "--family", "gl", "--q", "5", "--g", "2", "--zeta-order", "4", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("order"), 480);
    EXPECT_EQ(doc.at("brute"), doc.at("character"));
    EXPECT_TRUE(doc.at("agreement").get<bool>());
}

TEST_F(CliTest, CountUsageErrors)
{
    const auto r = run({"count", "--family", "gl", "--q", "3", "--g", "1", "--zeta-order", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("central element of order 3 unavailable"), std::string::npos);
    EXPECT_EQ(run({"count", "--family", "gl", "--q", "4", "--g", "1", "--zeta-order", "1"}).code, 2);
    EXPECT_EQ(run({"count", "--family", "gl", "--q", "7", "--g", "1", "--zeta-order", "2"}).code, 2);
    EXPECT_EQ(run({"count", "--family", "sl", "--q", "5", "--g", "1", "--zeta-order", "4"}).code, 2);
    EXPECT_EQ(run({"count", "--family", "pgl", "--q", "3", "--g", "1"}).code, 2);
}

TEST_F(CliTest, TableExport)
{
    const auto r = run({"table", "--family", "sl", "--q", "3"});
    EXPECT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("characters").size(), 7u);
}

TEST_F(CliTest, FlagErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"compute", "--kind", "E", "--n", "0", "--g", "2"}).code, 2);
    EXPECT_EQ(run({"compute", "--kind", "E", "--n", "2", "--g", "-1"}).code, 2);
    EXPECT_EQ(run({"compute", "--kind", "F", "--n", "2", "--g", "2"}).code, 2);
    EXPECT_EQ(run({"compute", "--kind", "E", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"compute", "--kind", "E", "--n", "2", "--g", "2", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, BinaryIsByteDeterministic)
{
    auto capture = [&](const std::string &args) {
        const std::string cmd = std::string(CHARVAR_CLI_PATH) + " " + args + " --cache-dir " + dir.string();
        std::string out;
        FILE *pipe = ::popen(cmd.c_str(), "r");
        EXPECT_NE(pipe, nullptr);
        std::array<char, 4096> buf{};
        std::size_t got;
        while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
            out.append(buf.data(), got);
        }
        const int status = ::pclose(pipe);
        return std::make_pair(WEXITSTATUS(status), out);
    };
    const auto a = capture("compute --kind hqt --n 2 --g 3");
    const auto b = capture("compute --kind hqt --n 2 --g 3");
    EXPECT_EQ(a.first, 0);
    EXPECT_EQ(a.second, b.second);
    EXPECT_EQ(result_from_document(json::parse(a.second)).polynomial, invariant_polynomial(Kind::Hqt, 2, 3));
    EXPECT_EQ(capture("compute --kind E --n 2 --g 3 --format text").second,
              "1 - 4*q^2 + 6*q^4 - 14*q^6 + 6*q^8 - 4*q^10 + q^12\n");
}
