#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "parbias/counting.hpp"

using namespace parbias;

namespace {

const std::vector<ClassSpec> kSpecs = {
    ClassSpec::P(),       ClassSpec::Pd(),          ClassSpec::Q(),
    ClassSpec::DQ(),      ClassSpec::avoiding({2}), ClassSpec::avoiding({1, 2}),
    ClassSpec::avoiding({3})};

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("parbias-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("enumeration counting matches the independent oracle") {
    for (const auto& spec : kSpecs)
        for (long n = 0; n <= 20; ++n) {
            BiasCount c = count_by_enumeration(n, spec);
            CHECK(c.n == n);
            CHECK(testutil::matches(testutil::oracle_count(n, spec), c));
        }
}

TEST_CASE("dp equals enumeration on every class") {
    for (const auto& spec : kSpecs) {
        CountTable t = count_by_dp(25, spec);
        REQUIRE(t.n_max() == 25);
        for (long n = 0; n <= 25; ++n)
            CHECK(t.rows[n] == count_by_enumeration(n, spec));
    }
}

TEST_CASE("dp totals for the unrestricted class follow the pentagonal recurrence") {
    CountTable t = count_by_dp(120, ClassSpec::P());
    auto pent = pentagonal_partition_numbers(120);
    for (long n = 0; n <= 120; ++n)
        CHECK(t.rows[n].total() == pent[n]);
}

TEST_CASE("dp handles n_max 0 and bias field is irrelevant to storage") {
    CountTable t = count_by_dp(0, ClassSpec::P().with_bias(Bias::OddHeavy));
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].balanced == 1);
    CHECK(t.rows[0].odd_heavy == 0);
    CHECK(t.rows[0].total() == 1);
}

TEST_CASE("cache round-trip preserves the table bit-exactly") {
    TempDir dir;
    CountTable t = count_by_dp(40, ClassSpec::Q());
    REQUIRE(cache_store(t, dir.path.string()));
    std::string warn;
    auto back = cache_load(ClassSpec::Q(), dir.path.string(), &warn);
    REQUIRE(back.has_value());
    CHECK(warn.empty());
    CHECK(*back == t);
}

TEST_CASE("cache miss and key separation") {
    TempDir dir;
    CHECK_FALSE(cache_load(ClassSpec::P(), dir.path.string()).has_value());
    REQUIRE(cache_store(count_by_dp(10, ClassSpec::P()), dir.path.string()));
    REQUIRE(cache_store(count_by_dp(10, ClassSpec::Pd()), dir.path.string()));
    auto p = cache_load(ClassSpec::P(), dir.path.string());
    auto pd = cache_load(ClassSpec::Pd(), dir.path.string());
    REQUIRE(p.has_value());
    REQUIRE(pd.has_value());
    CHECK(p->rows[10].total() == 42);
    CHECK(pd->rows[10].total() == 10);  // distinct partitions of 10
}

TEST_CASE("corrupt caches are rejected with a reason") {
    TempDir dir;
    CountTable t = count_by_dp(5, ClassSpec::P());
    REQUIRE(cache_store(t, dir.path.string()));
    const std::string path = cache_file_path(ClassSpec::P(), dir.path.string());

    auto corrupt_with = [&](const std::string& contents) {
        std::ofstream out(path);
        out << contents;
    };
    std::string warn;

    corrupt_with("not a header\n");
    CHECK_FALSE(cache_load(ClassSpec::P(), dir.path.string(), &warn).has_value());
    CHECK(warn.find("header") != std::string::npos);

    corrupt_with("parbias-count-cache v1\nd:0;m:1;f:\t0\tx\t0\t1\n");
    CHECK_FALSE(cache_load(ClassSpec::P(), dir.path.string(), &warn).has_value());

    corrupt_with("parbias-count-cache v1\nd:0;m:1;f:\t5\t0\t0\t1\n");
    warn.clear();
    CHECK_FALSE(cache_load(ClassSpec::P(), dir.path.string(), &warn).has_value());
    CHECK(warn.find("non-contiguous") != std::string::npos);

    corrupt_with("parbias-count-cache v1\n");
    warn.clear();
    CHECK_FALSE(cache_load(ClassSpec::P(), dir.path.string(), &warn).has_value());
    CHECK_FALSE(warn.empty());
}

TEST_CASE("cache store fails cleanly on an unwritable location") {
    CHECK_FALSE(cache_store(count_by_dp(3, ClassSpec::P()),
                            "/nonexistent-dir/nested"));
}
