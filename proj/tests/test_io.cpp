#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "partalg/io.hpp"
#include "partalg/pipeline.hpp"

using namespace partalg;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("partalg-test-" + name);
    fs::remove_all(d);
    return d;
}

}  // namespace

TEST_CASE("SHA-256 digests") {
    CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("JSON round trips") {
    const FiniteGroup g = builtin_group("SL2:3");
    const ClassData cd = conjugacy_classes(g);
    const ClassData back = io::class_data_from_json(io::to_json(cd));
    CHECK(back.sizes == cd.sizes);
    CHECK(back.class_of == cd.class_of);
    CHECK(back.power == cd.power);
    const CharacterTable ct = compute_character_table(g, cd);
    const CharacterTable ct2 = io::character_table_from_json(io::to_json(ct, true));
    CHECK(ct2.chi == ct.chi);
    CHECK(ct2.degrees == ct.degrees);
    CHECK(io::to_json(ct2).dump() == io::to_json(ct).dump());
    const auto p = build_partition(g, cd, PartitionSpec::trivial());
    const auto t = structure_constants(g, p);
    CHECK(io::tensor_from_json(io::to_json(t)) == t);
    const auto text = io::render_text(io::to_json(ct));
    CHECK(text.find("degrees: [1, 1, 1, 2, 2, 2, 3]") != std::string::npos);
}

TEST_CASE("cache hits reproduce cold results and corrupt entries are recomputed") {
    const fs::path dir = fresh_dir("cache");
    std::ostringstream warn;
    const io::Cache cache(dir, &warn);
    const FiniteGroup g = builtin_group("Sn:4");
    const ClassData cold = io::cached_classes(g, cache);
    const CharacterTable ct_cold = io::cached_character_table(g, cold, cache);
    CHECK(cache.hits() == 0);
    const ClassData warm = io::cached_classes(g, cache);
    const CharacterTable ct_warm = io::cached_character_table(g, warm, cache);
    CHECK(cache.hits() == 2);
    CHECK(io::to_json(warm).dump() == io::to_json(cold).dump());
    CHECK(io::to_json(ct_warm, true).dump() == io::to_json(ct_cold, true).dump());

    // flip a payload byte in every entry: the digest check must catch it
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ifstream in(e.path());
        std::string s((std::istreambuf_iterator<char>(in)), {});
        in.close();
        const auto pos = s.find("\"sizes\":[1,");
        if (pos == std::string::npos) continue;
        s.replace(pos, 11, "\"sizes\":[2,");
        std::ofstream(e.path(), std::ios::trunc) << s;
    }
    const ClassData again = io::cached_classes(g, cache);
    CHECK(again.sizes == cold.sizes);
    CHECK(warn.str().find("digest") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("partitions from normal subgroups and verify-all") {
    const FiniteGroup a5 = builtin_group("An:5");
    const ClassData cd = conjugacy_classes(a5);
    const auto p = build_partition(a5, cd, PartitionSpec::trivial());
    const auto lat = normal_subgroup_lattice(structure_constants(a5, p), cd.sizes);
    std::set<std::vector<std::vector<std::size_t>>> distinct;
    for (const auto& s : normal_subgroup_partitions(lat, cd.n_classes)) {
        const auto gp = build_partition(a5, cd, s);
        if (gp.kind() != PartitionKind::Trivial && gp.blocks.size() != cd.n_classes) distinct.insert(gp.blocks);
    }
    CHECK(distinct.size() >= 3);

    for (const char* grp : {"Sn:3", "Q8", "An:4"}) {
        CAPTURE(grp);
        const FiniteGroup g = builtin_group(grp);
        const ClassData c = conjugacy_classes(g);
        const Report r = verify_all(g, c, compute_character_table(g, c), VerifyOptions{});
        for (const auto& e : r.entries)
            if (!e.pass) FAIL_CHECK(e.name << ": " << e.detail);
        CHECK(r.ok());
        CHECK(r.entries.size() > 20);
    }
}
