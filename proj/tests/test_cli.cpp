#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "oddcat/suites.hpp"

using namespace oddcat;

TEST_CASE("reports are deterministic modulo timing") {
    SuiteConfig cfg;
    cfg.n = 2;
    auto r1 = suite_grdim(cfg);
    auto r2 = suite_grdim(cfg);
    CHECK(report_json(r1, false).dump() == report_json(r2, false).dump());
}

TEST_CASE("empty record lists give a valid report") {
    auto j = report_json({});
    CHECK(j["records"].is_array());
    CHECK(j["records"].empty());
    CHECK(j["summary"]["passed"] == 0);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(report_markdown({}).find("0 passed") != std::string::npos);
}

TEST_CASE("failures flip the exit-status predicate and appear in the report") {
    RecordSink sink;
    VerificationRecord bad;
    bad.suite = "demo";
    bad.check = "always fails";
    bad.citation = "plumbing";
    bad.passed = false;
    bad.witness = "counterexample";
    sink.add(bad);
    CHECK(!sink.all_passed());
    auto j = report_json(sink.records());
    CHECK(j["summary"]["failed"] == 1);
    std::string md = report_markdown(sink.records());
    CHECK(md.find("fail") != std::string::npos);
    CHECK(md.find("counterexample") != std::string::npos);
    VerificationRecord good;
    good.passed = true;
    sink.add(good);
    CHECK(!sink.all_passed());
    VerificationRecord skipped;
    skipped.skipped = true;
    RecordSink sink2;
    sink2.add(skipped);
    CHECK(sink2.all_passed());
}

TEST_CASE("sign-table cache round trips and invalidates on version change") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "oddcat-test-cache";
    fs::remove_all(dir);
    // materialize some words, store, reload
    signed_word_table(3).words_of(Permutation::longest(3));
    REQUIRE(store_sign_table(3, dir));
    std::string before = signed_word_table(3).serialize();
    REQUIRE(load_sign_table(3, dir));
    CHECK(signed_word_table(3).serialize() == before);
    // warm store is byte-identical
    REQUIRE(store_sign_table(3, dir));
    std::ifstream f1(dir / "signtable-n3.txt");
    std::stringstream s1;
    s1 << f1.rdbuf();
    REQUIRE(store_sign_table(3, dir));
    std::ifstream f2(dir / "signtable-n3.txt");
    std::stringstream s2;
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    // a version bump invalidates the file
    {
        std::ofstream f(dir / "signtable-n3.txt");
        f << "oddcat-cache-0\n" << before;
    }
    CHECK(!load_sign_table(3, dir));
    // corrupt cache is ignored
    {
        std::ofstream f(dir / "signtable-n3.txt");
        f << kCacheVersion << "\ngarbage";
    }
    CHECK(!load_sign_table(3, dir));
    fs::remove_all(dir);
}

TEST_CASE("suite dispatcher knows every advertised suite") {
    SuiteConfig cfg;
    cfg.n = 1;
    cfg.degree_bound = 4;
    for (const auto& name : suite_names()) {
        auto rs = run_suite(name, cfg);
        for (const auto& r : rs) {
            CHECK(r.suite == name);
            CHECK(!r.citation.empty());
        }
    }
    CHECK_THROWS(run_suite("nonsense", cfg));
}

TEST_CASE("trivial sizes pass across all suites") {
    SuiteConfig cfg;
    cfg.n = 1;
    cfg.degree_bound = 6;
    for (const auto& name : suite_names()) {
        auto rs = run_suite(name, cfg);
        for (const auto& r : rs) {
            INFO(name << " / " << r.check << " : " << r.witness);
            CHECK((r.skipped || r.passed));
        }
    }
}
