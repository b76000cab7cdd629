#include "partalg/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

namespace partalg::io {

namespace {

json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json rat_json(const Rat& v) {
    if (v.get_den() == 1) return int_json(v.get_num());
    return v.get_str();
}

Rat rat_from(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
}

template <class T>
json vec_json(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, Int>) a.push_back(int_json(x));
        else if constexpr (std::is_same_v<T, Rat>) a.push_back(rat_json(x));
        else a.push_back(x);
    }
    return a;
}

}  // namespace

json to_json(const Cyclotomic& c, bool exact) {
    if (!exact) return c.to_string();
    return json{{"order", c.order()}, {"coeffs", vec_json(c.coeffs())}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    std::vector<Rat> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rat_from(x));
    return Cyclotomic(j.at("order").get<unsigned>(), std::move(c));
}

json to_json(const Poly& p) {
    return json{{"text", p.to_string()}, {"factored", render_factored(p)}, {"coeffs", vec_json(p.coeffs())}};
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(int_json(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(rat_json(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const ClassData& cd) {
    return json{{"n_classes", cd.n_classes},   {"exponent", cd.exponent},         {"sizes", cd.sizes},
                {"reps", cd.reps},             {"orders", cd.rep_order},          {"inverse", cd.inverse_class},
                {"members", cd.members},       {"power", cd.power}};
}

ClassData class_data_from_json(const json& j) {
    ClassData cd;
    cd.n_classes = j.at("n_classes").get<std::size_t>();
    cd.exponent = j.at("exponent").get<unsigned>();
    cd.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    cd.reps = j.at("reps").get<std::vector<Elem>>();
    cd.rep_order = j.at("orders").get<std::vector<unsigned>>();
    cd.inverse_class = j.at("inverse").get<std::vector<std::size_t>>();
    cd.members = j.at("members").get<std::vector<std::vector<Elem>>>();
    cd.power = j.at("power").get<std::vector<std::vector<std::size_t>>>();
    std::size_t order = 0;
    for (std::size_t s : cd.sizes) order += s;
    cd.class_of.assign(order, 0);
    for (std::size_t c = 0; c < cd.members.size(); ++c)
        for (Elem e : cd.members[c]) cd.class_of.at(e) = c;
    return cd;
}

json to_json(const GoodPartition& p) {
    json j{{"kind", to_string(p.kind())}, {"spec", p.spec.to_string()}, {"n_blocks", p.n()},
           {"blocks", p.blocks},          {"sizes", p.sizes},           {"inverse_block", p.inverse_block},
           {"identity_singleton", p.identity_is_singleton()}};
    if (!p.galois_group.empty()) j["galois_group"] = p.galois_group;
    return j;
}

json to_json(const StructTensor& t) {
    json a = json::array();
    for (std::size_t l = 0; l < t.n; ++l) {
        json m = json::array();
        for (std::size_t i = 0; i < t.n; ++i) {
            json r = json::array();
            for (std::size_t j = 0; j < t.n; ++j) r.push_back(t.at(l, i, j));
            m.push_back(std::move(r));
        }
        a.push_back(std::move(m));
    }
    return json{{"n", t.n}, {"a", std::move(a)}};
}

StructTensor tensor_from_json(const json& j) {
    StructTensor t;
    t.n = j.at("n").get<std::size_t>();
    for (const auto& m : j.at("a"))
        for (const auto& r : m)
            for (const auto& v : r) t.a.push_back(v.get<std::int64_t>());
    if (t.a.size() != t.n * t.n * t.n) throw std::runtime_error("tensor has the wrong size");
    return t;
}

json to_json(const GramMatrix& gm) {
    return json{{"p", to_json(gm.p)},
                {"determinant", int_json(gm.determinant)},
                {"traces", vec_json(gm.p1)},
                {"semisimple", gm.semisimple}};
}

json to_json(const CharacterTable& ct, bool exact) {
    json chi = json::array();
    for (const auto& row : ct.chi) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v, exact));
        chi.push_back(std::move(r));
    }
    json j{{"order", ct.order},
           {"exponent", ct.exponent},
           {"class_sizes", ct.class_sizes},
           {"class_orders", ct.class_orders},
           {"degrees", ct.degrees},
           {"chi", std::move(chi)}};
    if (exact) {
        j["inverse_class"] = ct.inverse_class;
        j["power"] = ct.power;
        j["p"] = ct.p;
        j["omega"] = ct.omega;
    }
    return j;
}

CharacterTable character_table_from_json(const json& j) {
    CharacterTable ct;
    ct.order = j.at("order").get<std::size_t>();
    ct.exponent = j.at("exponent").get<unsigned>();
    ct.class_sizes = j.at("class_sizes").get<std::vector<std::size_t>>();
    ct.class_orders = j.at("class_orders").get<std::vector<unsigned>>();
    ct.degrees = j.at("degrees").get<std::vector<unsigned>>();
    ct.inverse_class = j.at("inverse_class").get<std::vector<std::size_t>>();
    ct.power = j.at("power").get<std::vector<std::vector<std::size_t>>>();
    ct.p = j.at("p").get<modp::u64>();
    ct.omega = j.at("omega").get<modp::u64>();
    for (const auto& row : j.at("chi")) {
        std::vector<Cyclotomic> r;
        for (const auto& v : row) r.push_back(cyclotomic_from_json(v));
        ct.chi.push_back(std::move(r));
    }
    return ct;
}

json to_json(const PartitionCharacters& pc) {
    json lam = json::array();
    for (const auto& row : pc.lambda) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        lam.push_back(std::move(r));
    }
    json j{{"lambda", std::move(lam)}, {"constituents", pc.constituents}, {"d", vec_json(pc.degrees.d)}};
    if (pc.degrees.split) {
        j["f"] = vec_json(pc.degrees.f);
        j["e"] = vec_json(pc.degrees.e);
        j["o"] = vec_json(pc.degrees.o);
    }
    return j;
}

json to_json(const LinearFormProduct& f) {
    json forms = json::array();
    for (const auto& row : f.forms) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        forms.push_back(std::move(r));
    }
    return json{{"text", f.to_string()}, {"forms", std::move(forms)}, {"multiplicities", vec_json(f.multiplicities)}};
}

json to_json(const PPrimePart& p) {
    return json{{"p", p.p}, {"stripped", p.stripped}, {"reduced", p.to_string()}, {"coeffs", p.reduced}};
}

json to_json(const CommutatorCounts& c) {
    json j{{"convention", to_string(c.convention)}, {"n", c.n}, {"weight", vec_json(c.weight)}, {"p1", vec_json(c.p1)}};
    if (c.max_r >= 2) {
        json m = json::array();
        for (std::size_t i = 0; i < c.n; ++i) {
            json r = json::array();
            for (std::size_t k = 0; k < c.n; ++k) r.push_back(int_json(c.at(i, k)));
            m.push_back(std::move(r));
        }
        j["p2"] = std::move(m);
    }
    if (c.max_r >= 3) {
        json t = json::array();
        for (std::size_t i = 0; i < c.n; ++i) {
            json m = json::array();
            for (std::size_t k = 0; k < c.n; ++k) {
                json r = json::array();
                for (std::size_t l = 0; l < c.n; ++l) r.push_back(int_json(c.at(i, k, l)));
                m.push_back(std::move(r));
            }
            t.push_back(std::move(m));
        }
        j["p3"] = std::move(t);
    }
    return j;
}

json to_json(const Lattice& l) {
    json edges = json::array();
    for (const auto& [a, b] : l.edges) edges.push_back({a, b});
    return json{{"nodes", l.nodes}, {"sizes", l.sizes}, {"edges", std::move(edges)}};
}

json to_json(const DeterminantCheck& d) {
    return json{{"applicable", d.applicable}, {"pass", d.pass}, {"trials", d.trials}, {"seed", d.seed},
                {"detail", d.detail}};
}

namespace {

json side_json(const McKaySide& s) {
    json m = json::object();
    for (const auto& [i, c] : s.m_table) m[std::to_string(i)] = c;
    json fixed = json::array();
    for (const auto& f : s.galois_fixed)
        fixed.push_back(json{{"t", f.t}, {"direct", f.direct}, {"from_partition", f.from_partition}});
    return json{{"order", s.order},
                {"n_classes", s.n_classes},
                {"degree_polynomial", render_factored(s.degree_polynomial)},
                {"pprime", to_json(s.pprime)},
                {"M_table", std::move(m)},
                {"galois_fixed", std::move(fixed)}};
}

}  // namespace

json to_json(const McKayVerdict& v) {
    const json g = side_json(v.g), n = side_json(v.n);
    return json{{"group", v.group},
                {"order", v.g.order},
                {"p", v.p},
                {"field", v.field},
                {"seed", v.seed},
                {"sylow_order", v.sylow_order},
                {"normalizer_order", v.normalizer_order},
                {"D_G_pprime", v.g.pprime.to_string()},
                {"D_N_pprime", v.n.pprime.to_string()},
                {"equal", v.equal},
                {"M_table_G", g["M_table"]},
                {"M_table_N", n["M_table"]},
                {"galois_fixed", json{{"G", g["galois_fixed"]}, {"N", n["galois_fixed"]}, {"agree", v.galois_agree}}},
                {"G", g},
                {"N", n}};
}

json to_json(const Report& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json x{{"name", e.name}, {"pass", e.pass}};
        if (!e.detail.empty()) x["detail"] = e.detail;
        entries.push_back(std::move(x));
    }
    return json{{"ok", r.ok()}, {"checks", std::move(entries)}};
}

namespace {

bool scalar_array(const json& j) {
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string inline_array(const json& j) {
    std::string s = "[";
    bool first = true;
    for (const auto& x : j) {
        if (!first) s += ", ";
        first = false;
        s += scalar_text(x);
    }
    return s + "]";
}

void render(const json& j, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        os << pad << k << ':';
        if (v.is_object()) {
            os << '\n';
            render(v, indent + 2, os);
        } else if (v.is_array() && scalar_array(v)) {
            os << ' ' << inline_array(v) << '\n';
        } else if (v.is_array()) {
            os << '\n';
            for (const auto& x : v) {
                if (x.is_object()) {
                    os << pad << "  -\n";
                    render(x, indent + 4, os);
                } else if (x.is_array() && scalar_array(x)) {
                    os << pad << "  " << inline_array(x) << '\n';
                } else {
                    os << pad << "  " << x.dump() << '\n';
                }
            }
        } else {
            os << ' ' << scalar_text(v) << '\n';
        }
    }
}

}  // namespace

std::string render_text(const json& j) {
    std::ostringstream os;
    if (j.is_object()) render(j, 0, os);
    else os << scalar_text(j) << '\n';
    return os.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

Cache::Cache(std::filesystem::path dir, std::ostream* warn) : dir_(std::move(dir)), warn_(warn) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::optional<json> Cache::get(const std::string& key_material) const {
    if (!enabled()) return std::nullopt;
    const std::string key = sha256_hex(key_material);
    const auto path = dir_ / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    auto miss = [&](const std::string& why) -> std::optional<json> {
        if (warn_) *warn_ << "warning: cache entry " << path.string() << ' ' << why << "; recomputing\n";
        return std::nullopt;
    };
    json doc;
    try {
        in >> doc;
    } catch (const std::exception&) {
        return miss("is not valid JSON");
    }
    if (!doc.is_object() || !doc.contains("key") || !doc.contains("payload") || !doc.contains("payload_sha256"))
        return miss("is malformed");
    if (doc["key"] != key) return miss("has a mismatching key");
    if (doc["payload_sha256"] != sha256_hex(doc["payload"].dump())) return miss("fails its digest check");
    ++hits_;
    return doc["payload"];
}

void Cache::put(const std::string& key_material, const json& payload) const {
    if (!enabled()) return;
    const std::string key = sha256_hex(key_material);
    const json doc{{"key", key}, {"version", kCacheVersion}, {"payload_sha256", sha256_hex(payload.dump())},
                   {"payload", payload}};
    const auto path = dir_ / (key + ".json");
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump();
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string cache_key(const FiniteGroup& g, const std::string& what, const std::string& partition) {
    return std::string(kCacheVersion) + '\n' + what + '\n' + partition + '\n' + g.to_table_text();
}

namespace {

template <class T, class Compute, class ToJson, class FromJson>
T cached(const Cache& cache, const std::string& key, Compute compute, ToJson to, FromJson from) {
    if (auto hit = cache.get(key)) {
        try {
            return from(*hit);
        } catch (const std::exception&) {
            // fall through: treat undecodable payloads as misses
        }
    }
    T value = compute();
    cache.put(key, to(value));
    return value;
}

}  // namespace

ClassData cached_classes(const FiniteGroup& g, const Cache& cache) {
    return cached<ClassData>(
        cache, cache_key(g, "classes"), [&] { return conjugacy_classes(g); },
        [](const ClassData& cd) { return to_json(cd); }, class_data_from_json);
}

CharacterTable cached_character_table(const FiniteGroup& g, const ClassData& cd, const Cache& cache) {
    return cached<CharacterTable>(
        cache, cache_key(g, "chartable"), [&] { return compute_character_table(g, cd); },
        [](const CharacterTable& ct) { return to_json(ct, true); }, character_table_from_json);
}

StructTensor cached_tensor(const FiniteGroup& g, const GoodPartition& p, const Cache& cache) {
    return cached<StructTensor>(
        cache, cache_key(g, "tensor", p.spec.to_string()), [&] { return structure_constants(g, p); },
        [](const StructTensor& t) { return to_json(t); }, tensor_from_json);
}

}  // namespace partalg::io
