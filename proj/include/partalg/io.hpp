#pragma once

// JSON views of the engine's results and the content-addressed cache for class data,
// character tables and structure-constant tensors.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "partalg/commutators.hpp"
#include "partalg/mckay.hpp"

namespace partalg::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kCacheVersion = "partalg-cache-1";

json to_json(const Cyclotomic& c, bool exact = false);
Cyclotomic cyclotomic_from_json(const json& j);
json to_json(const Poly& p);
json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);

json to_json(const ClassData& cd);
ClassData class_data_from_json(const json& j);
json to_json(const GoodPartition& p);
json to_json(const StructTensor& t);
StructTensor tensor_from_json(const json& j);
json to_json(const GramMatrix& gm);
json to_json(const CharacterTable& ct, bool exact = false);
CharacterTable character_table_from_json(const json& j);
json to_json(const PartitionCharacters& pc);
json to_json(const LinearFormProduct& f);
json to_json(const PPrimePart& p);
json to_json(const CommutatorCounts& c);
json to_json(const Lattice& l);
json to_json(const DeterminantCheck& d);
json to_json(const McKayVerdict& v);
json to_json(const Report& r);

/// Indented "key: value" rendering of a JSON report.
std::string render_text(const json& j);

std::string sha256_hex(const std::string& bytes);

/// Files named by the digest of the key material; each stores the payload with its own
/// digest. A corrupt or mismatching entry is reported on `warn` and treated as a miss.
class Cache {
public:
    Cache() = default;
    Cache(std::filesystem::path dir, std::ostream* warn);

    bool enabled() const { return !dir_.empty(); }
    std::optional<json> get(const std::string& key_material) const;
    void put(const std::string& key_material, const json& payload) const;
    std::size_t hits() const { return hits_; }

private:
    std::filesystem::path dir_;
    std::ostream* warn_ = nullptr;
    mutable std::size_t hits_ = 0;
};

std::string cache_key(const FiniteGroup& g, const std::string& what, const std::string& partition = {});

ClassData cached_classes(const FiniteGroup& g, const Cache& cache);
CharacterTable cached_character_table(const FiniteGroup& g, const ClassData& cd, const Cache& cache);
StructTensor cached_tensor(const FiniteGroup& g, const GoodPartition& p, const Cache& cache);

}  // namespace partalg::io
