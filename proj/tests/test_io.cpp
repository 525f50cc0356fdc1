#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <symchar/cache.hpp>
#include <symchar/format.hpp>
#include <symchar/frobchar.hpp>

using namespace symchar;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name)
{
    auto d = fs::temp_directory_path() / ("symchar_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

} // namespace

TEST(Render, Text)
{
    EXPECT_EQ(render_text(basis_convert(ch_D(3), Basis::s)), "s[3] + q*s[1,1,1]");
    EXPECT_EQ(render_text(lyndon(6)), "(1/6)p[1^6] - (1/6)p[2^3] - (1/6)p[3^2] + (1/6)p[6]");
    EXPECT_EQ(render_text(basis_convert(ch_C(3), Basis::s)), "s[3] + q*s[1,1,1] + q*s[2,1] + q^2*s[2,1]");
    EXPECT_EQ(render_text(basis_convert(ch_OT(2, 3), Basis::s)), "s[2] + q*s[1,1] + q^2*s[2] + O(q^3)");
    EXPECT_EQ(render_text(Rational(-2) * sym_h(Partition{2, 1, 1})), "-2*h[2,1^2]");
    EXPECT_EQ(render_text(SymFunc(3, Basis::s)), "0");
}

TEST(Render, Latex)
{
    EXPECT_EQ(render_latex(basis_convert(ch_D(4), Basis::s)), "s_{4} + q s_{2,1,1} + q^{2} s_{2,2}");
    EXPECT_EQ(render_latex(lyndon(2)), "\\frac{1}{2} p_{1^{2}} - \\frac{1}{2} p_{2}");
}

TEST(OutputRecord, JsonRoundTrip)
{
    std::vector<std::pair<std::string, SymFunc>> cases{
        {"d", basis_convert(ch_D(5), Basis::s)},
        {"lyndon", lyndon(6)},
        {"ot", basis_convert(ch_OT(3, 5), Basis::h)},
        {"c", basis_convert(ch_C(4), Basis::m)},
    };
    for (const auto& [name, f] : cases) {
        OutputRecord rec = make_record(name, f.degree(), 5, f);
        rec.meta.ms = 17;
        rec.meta.cache_hits = 3;
        auto text = nlohmann::json(rec).dump();
        auto back = nlohmann::json::parse(text).get<OutputRecord>();
        EXPECT_EQ(back, rec);
        EXPECT_EQ(nlohmann::json(back).dump(), text);
        // Terms rebuild the same function.
        EXPECT_FALSE(first_difference(record_to_symfunc(back), f, f.basis()).has_value()) << name;
    }
}

TEST(OutputRecord, Schema)
{
    auto j = nlohmann::json(make_record("ot", 2, 4, basis_convert(ch_OT(2, 4), Basis::s)));
    for (auto key : {"formula", "n", "basis", "max_q_degree", "terms", "meta"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["terms"][1], (nlohmann::json{{"q", 1}, {"partition", {1, 1}}, {"coeff", "1"}}));
    EXPECT_TRUE(j["meta"].contains("version"));
    EXPECT_TRUE(j["meta"].contains("ms"));
}

TEST(Checksum, Fnv1a)
{
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(DiskCache, StoreThenLoad)
{
    auto dir = fresh_dir("roundtrip");
    DiskTableCache cache(dir);
    auto t = compute_character_table(8);
    ASSERT_TRUE(cache.store(t));
    EXPECT_TRUE(fs::exists(dir / "chartab_v1_n8.json"));
    auto loaded = cache.load(8);
    ASSERT_TRUE(loaded.has_value());
    EXPECT_EQ(*loaded, t);
    EXPECT_FALSE(cache.load(9).has_value());
    // No stray temporaries after an atomic write.
    int files = 0;
    for (auto& e : fs::directory_iterator(dir)) files += e.is_regular_file() ? 1 : 0;
    EXPECT_EQ(files, 1);
    fs::remove_all(dir);
}

TEST(DiskCache, CorruptEntriesAreMisses)
{
    auto dir = fresh_dir("corrupt");
    std::ostringstream log;
    DiskTableCache cache(dir, true, &log);
    auto t = compute_character_table(5);
    ASSERT_TRUE(cache.store(t));
    auto path = cache.path_for(5);

    auto j = DiskTableCache::encode(t);
    j["payload"][0][0] = 2;
    std::ofstream(path) << j.dump();
    EXPECT_FALSE(cache.load(5).has_value());
    EXPECT_NE(log.str().find("checksum"), std::string::npos);

    j = DiskTableCache::encode(t);
    j["format_version"] = 99;
    std::ofstream(path) << j.dump();
    EXPECT_FALSE(cache.load(5).has_value());

    std::ofstream(path) << "{ not json";
    EXPECT_FALSE(cache.load(5).has_value());

    std::ofstream(path) << "{}";
    EXPECT_FALSE(cache.load(5).has_value());
    fs::remove_all(dir);
}

TEST(DiskCache, UnwritableDirectoryDegrades)
{
    auto file = fresh_dir("blocker");
    std::ofstream(file) << "x"; // a file where the directory should be
    DiskTableCache cache(file / "sub");
    EXPECT_FALSE(cache.store(compute_character_table(4)));
    EXPECT_FALSE(cache.load(4).has_value());
    fs::remove(file);
}

TEST(DiskCache, BackendServesStore)
{
    auto dir = fresh_dir("backend");
    auto& store = CharacterTableStore::instance();
    DiskTableCache(dir).install();
    store.clear();
    character_table(6);
    EXPECT_EQ(store.stats().builds, 1);
    EXPECT_EQ(store.stats().hits, 0);
    store.clear();
    auto t = character_table(6);
    EXPECT_EQ(store.stats().hits, 1);
    EXPECT_EQ(*t, compute_character_table(6));
    store.set_backend({});
    store.clear();
    fs::remove_all(dir);
}

TEST(DiskCache, DirectoryResolution)
{
    EXPECT_EQ(resolve_cache_dir("/x/y"), fs::path("/x/y"));
    const char* old = std::getenv("SYMCHAR_CACHE");
    std::string saved = old ? old : "";
    ::setenv("SYMCHAR_CACHE", "/from/env", 1);
    EXPECT_EQ(resolve_cache_dir(), fs::path("/from/env"));
    ::unsetenv("SYMCHAR_CACHE");
    ::setenv("XDG_CACHE_HOME", "/xdg", 1);
    EXPECT_EQ(resolve_cache_dir(), fs::path("/xdg/symchar"));
    ::unsetenv("XDG_CACHE_HOME");
    if (old) ::setenv("SYMCHAR_CACHE", saved.c_str(), 1);
}
