// partalg: command-line front end. Reports are JSON (--format json) or an indented
// text view of the same document. Exit codes: 0 ok, 1 verification failure, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "partalg/io.hpp"
#include "partalg/pipeline.hpp"

using namespace partalg;
using io::json;

namespace {

struct Options {
    std::string builtin, table, perm;
    std::string partition = "trivial";
    unsigned prime = 0;
    std::string subfield = "trivial";
    std::string format = "text";
    std::string cache_dir;
    std::uint64_t seed = 0;
    std::size_t bound = kDefaultOrderBound;
    std::string out;
    bool brute = false;
    std::size_t trials = 20;
    std::string convention = "partition";
    bool timing = false;
    std::string other;
    std::string element;
    std::vector<long long> automorphisms;
};

GroupSource source_from(const std::string& kind, const std::string& value, std::size_t bound) {
    GroupSource s;
    s.value = value;
    s.order_bound = bound;
    if (kind == "builtin") s.kind = GroupSource::Kind::Builtin;
    else if (kind == "table") s.kind = GroupSource::Kind::TableFile;
    else if (kind == "perm") s.kind = GroupSource::Kind::PermFile;
    else throw InputError("group source must be builtin:, table: or perm:, got '" + kind + "'");
    return s;
}

FiniteGroup main_group(const Options& o) {
    const int given = !o.builtin.empty() + !o.table.empty() + !o.perm.empty();
    if (given != 1) throw InputError("give exactly one of --builtin, --table, --perm");
    if (!o.builtin.empty()) return load_group(source_from("builtin", o.builtin, o.bound));
    if (!o.table.empty()) return load_group(source_from("table", o.table, o.bound));
    return load_group(source_from("perm", o.perm, o.bound));
}

std::vector<Rat> parse_rationals(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            Rat r(item);
            r.canonicalize();
            out.push_back(r);
        } catch (const std::exception&) {
            throw InputError("'" + item + "' is not a rational number");
        }
    }
    return out;
}

class Runner {
public:
    Runner(const Options& o, std::ostream& warn)
        : o_(o), cache_(o.cache_dir.empty() ? io::Cache() : io::Cache(o.cache_dir, &warn)) {}

    int run(const std::string& cmd, json& doc) {
        g_ = std::make_unique<FiniteGroup>(main_group(o_));
        cd_ = io::cached_classes(*g_, cache_);
        doc["command"] = cmd;
        doc["group"] = g_->origin();
        doc["order"] = g_->order();
        doc["seed"] = o_.seed;
        if (cmd == "classes") return classes(doc);
        if (cmd == "partition") return partition(doc);
        if (cmd == "structconst") return structconst(doc);
        if (cmd == "gram") return gram(doc);
        if (cmd == "charpoly") return charpoly(doc);
        if (cmd == "casimir") return casimir(doc);
        if (cmd == "chartable") return chartable(doc);
        if (cmd == "frobpoly") return frobpoly(doc);
        if (cmd == "degpoly") return degpoly(doc);
        if (cmd == "pprime") return pprime(doc);
        if (cmd == "pijl") return pijl(doc);
        if (cmd == "reconstruct") return reconstruct(doc);
        if (cmd == "mckay") return mckay(doc);
        if (cmd == "lattice") return lattice(doc);
        if (cmd == "compare") return compare(doc);
        if (cmd == "detcheck") return detcheck(doc);
        if (cmd == "verify-all") return verify(doc);
        throw InputError("unknown command '" + cmd + "'");
    }

private:
    const GoodPartition& part() {
        if (!part_) part_ = std::make_unique<GoodPartition>(build_partition(*g_, cd_, PartitionSpec::parse(o_.partition)));
        return *part_;
    }
    const StructTensor& tensor() {
        if (!tensor_) tensor_ = std::make_unique<StructTensor>(io::cached_tensor(*g_, part(), cache_));
        return *tensor_;
    }
    const CharacterTable& table() {
        if (!ct_) ct_ = std::make_unique<CharacterTable>(io::cached_character_table(*g_, cd_, cache_));
        return *ct_;
    }
    const PartitionAnalysis& analysis() {
        if (!an_) an_ = std::make_unique<PartitionAnalysis>(analyze_partition(*g_, table(), part(), tensor()));
        return *an_;
    }
    void add_partition(json& doc) { doc["partition"] = io::to_json(part()); }

    int classes(json& doc) {
        doc["classes"] = io::to_json(cd_);
        return 0;
    }
    int partition(json& doc) {
        const auto spec = PartitionSpec::parse(o_.partition);
        const GoodPartition probe = make_blocks(*g_, cd_, spec);
        const auto v = validate_good_partition(probe, *g_);
        doc["spec"] = spec.to_string();
        doc["blocks"] = probe.blocks;
        doc["inverse_closed"] = v.inverse_closed;
        doc["product_closed"] = v.product_closed;
        doc["has_identity"] = v.has_identity;
        doc["good"] = v.ok();
        if (!v.ok()) doc["witness"] = v.describe();
        return v.ok() ? 0 : 1;
    }
    int structconst(json& doc) {
        add_partition(doc);
        doc["tensor"] = io::to_json(tensor());
        return 0;
    }
    int gram(json& doc) {
        add_partition(doc);
        const GramMatrix gm = gram_matrix(regular_representation(tensor()));
        doc["gram"] = io::to_json(gm);
        return 0;
    }
    int charpoly(json& doc) {
        add_partition(doc);
        const RegularRep r = regular_representation(tensor());
        json polys = json::array();
        if (!o_.element.empty()) {
            const auto coeffs = parse_rationals(o_.element);
            if (coeffs.size() != r.n()) throw InputError("--element needs one coefficient per block");
            polys.push_back(json{{"element", o_.element}, {"charpoly", io::to_json(char_poly_of_element(r, coeffs))}});
        } else {
            for (std::size_t i = 0; i < r.n(); ++i) {
                std::vector<Rat> e(r.n(), 0);
                e[i] = 1;
                polys.push_back(json{{"element", "C" + std::to_string(i)}, {"charpoly", io::to_json(char_poly_of_element(r, e))}});
            }
        }
        doc["charpolys"] = polys;
        return 0;
    }
    int casimir(json& doc) {
        add_partition(doc);
        const Casimir c = casimir_matrix(regular_representation(tensor()), part());
        doc["K"] = io::to_json(c.K);
        doc["charpoly"] = io::to_json(c.charpoly);
        doc["degree_polynomial"] = io::to_json(degree_polynomial_casimir(c));
        return 0;
    }
    int chartable(json& doc) {
        doc["table"] = io::to_json(table());
        int status = 0;
        try {
            verify_character_table(table());
            doc["orthogonality"] = true;
        } catch (const VerificationError& e) {
            doc["orthogonality"] = false;
            doc["error"] = e.what();
            status = 1;
        }
        if (part().kind() != PartitionKind::Trivial) {
            add_partition(doc);
            doc["partition_characters"] = io::to_json(analysis().chars);
        }
        return status;
    }
    int frobpoly(json& doc) {
        add_partition(doc);
        doc["frobenius_polynomial"] = io::to_json(analysis().frob);
        return 0;
    }
    int degpoly(json& doc) {
        add_partition(doc);
        const Poly cas = degree_polynomial_casimir(casimir_matrix(analysis().rep, part()));
        const Poly chr = degree_polynomial_from_degrees(analysis().chars.degrees.d);
        doc["degree_polynomial"] = render_factored(cas);
        doc["casimir_route"] = io::to_json(cas);
        doc["character_route"] = io::to_json(chr);
        doc["routes_agree"] = cas == chr;
        return cas == chr ? 0 : 1;
    }
    int pprime(json& doc) {
        if (o_.prime == 0) throw InputError("pprime needs --prime");
        add_partition(doc);
        const Poly d = degree_polynomial_casimir(casimir_matrix(regular_representation(tensor()), part()));
        doc["degree_polynomial"] = render_factored(d);
        doc["pprime"] = io::to_json(p_prime_part(d, o_.prime));
        if (part().kind() == PartitionKind::Trivial) {
            json m = json::object();
            for (const auto& [i, c] : residue_degree_counts(table(), o_.prime)) m[std::to_string(i)] = c;
            doc["M_table"] = m;
        }
        return 0;
    }
    int pijl(json& doc) {
        add_partition(doc);
        const Convention c = parse_convention(o_.convention);
        const auto counts = o_.brute ? commutator_counts_brute(*g_, part(), c) : commutator_counts(part(), tensor(), c);
        doc["method"] = o_.brute ? "elements" : "tensor";
        doc["counts"] = io::to_json(counts);
        const auto ps = power_sum_forms(regular_representation(tensor()), 3);
        const Int k = trace_constant(c, g_->order());
        bool ok = true;
        const std::size_t n = counts.n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) ok = ok && counts.at(i, j, l) == k * ps.coeff({i, j, l});
        doc["trace_constant"] = k.get_str();
        doc["counts_equal_constant_times_traces"] = ok;
        return ok ? 0 : 1;
    }
    int reconstruct(json& doc) {
        add_partition(doc);
        const auto& a = analysis();
        const auto fr = table_from_frobenius(a.frob, g_->order());
        const bool f_ok = fr.tensor == a.tensor && fr.gram.p == a.gram.p;
        const auto counts = commutator_counts(part(), tensor(), parse_convention(o_.convention));
        const auto tr = reconstruct_from_triples(counts, g_->order(), part().sizes);
        const bool t_ok = tr.tensor == a.tensor && matches_frobenius(tr, a.frob);
        doc["from_frobenius"] = json{{"tensor_matches", fr.tensor == a.tensor},
                                     {"gram_matches", fr.gram.p == a.gram.p},
                                     {"degree_polynomial", render_factored(fr.degree_polynomial)}};
        json mult = json::array();
        for (const auto& m : tr.multiplicities) mult.push_back(m.get_str());
        doc["from_triples"] = json{{"convention", o_.convention}, {"prime", tr.prime}, {"tensor_matches", tr.tensor == a.tensor},
                                   {"forms_match", matches_frobenius(tr, a.frob)}, {"multiplicities", mult}};
        return f_ok && t_ok ? 0 : 1;
    }
    int mckay(json& doc) {
        const PartitionSpec field = PartitionSpec::parse(o_.subfield);
        std::vector<unsigned> primes;
        if (o_.prime) primes.push_back(o_.prime);
        else primes = prime_divisors(g_->order());
        json verdicts = json::array();
        bool all = true;
        for (unsigned p : primes) {
            const auto v = mckay_check(*g_, g_->origin(), p, field, o_.seed, o_.automorphisms);
            verdicts.push_back(io::to_json(v));
            all = all && v.equal;
        }
        doc["verdicts"] = verdicts;
        doc["all_equal"] = all;
        return all ? 0 : 1;
    }
    int lattice(json& doc) {
        const GoodPartition triv = build_partition(*g_, cd_, PartitionSpec::trivial());
        const Lattice l = normal_subgroup_lattice(io::cached_tensor(*g_, triv, cache_), cd_.sizes);
        doc["lattice"] = io::to_json(l);
        if (o_.brute) {
            const auto b = normal_subgroups_brute(*g_, cd_);
            const std::set<std::vector<std::size_t>> x(l.nodes.begin(), l.nodes.end()), y(b.begin(), b.end());
            doc["brute_force_agrees"] = x == y;
            return x == y ? 0 : 1;
        }
        return 0;
    }
    int compare(json& doc) {
        if (o_.other.empty()) throw InputError("compare needs --other kind:value (e.g. builtin:Q8)");
        const auto colon = o_.other.find(':');
        if (colon == std::string::npos) throw InputError("--other must look like builtin:Q8 or table:path");
        const FiniteGroup h = load_group(source_from(o_.other.substr(0, colon), o_.other.substr(colon + 1), o_.bound));
        const ClassData hcd = io::cached_classes(h, cache_);
        const CharacterTable hct = io::cached_character_table(h, hcd, cache_);
        const PartitionSpec spec = PartitionSpec::parse(o_.partition);
        const PartitionAnalysis b = analyze_partition(h, hcd, hct, spec);
        const auto& a = analysis();
        const auto v = equal_by_permutation(a.frob, b.frob);
        doc["other"] = h.origin();
        doc["partition"] = spec.to_string();
        doc["frobenius_equal_up_to_permutation"] = v.equal;
        if (v.equal) doc["sigma"] = v.sigma;
        else doc["reason"] = v.reason;
        const Poly da = degree_polynomial_from_degrees(a.chars.degrees.d);
        const Poly db = degree_polynomial_from_degrees(b.chars.degrees.d);
        doc["degree_polynomials"] = json{{"first", render_factored(da)}, {"second", render_factored(db)}, {"equal", da == db}};
        const Lattice la = normal_subgroup_lattice(analysis_tensor_trivial(*g_, cd_), cd_.sizes);
        const Lattice lb = normal_subgroup_lattice(analysis_tensor_trivial(h, hcd), hcd.sizes);
        doc["normal_subgroup_orders"] = json{{"first", la.sizes}, {"second", lb.sizes}};
        return 0;
    }
    StructTensor analysis_tensor_trivial(const FiniteGroup& g, const ClassData& cd) {
        return io::cached_tensor(g, build_partition(g, cd, PartitionSpec::trivial()), cache_);
    }
    int detcheck(json& doc) {
        add_partition(doc);
        const std::uint64_t seed = o_.seed ? o_.seed : 20240607;
        const auto d = group_determinant_check(*g_, part(), analysis().frob, o_.trials, seed);
        doc["detcheck"] = io::to_json(d);
        doc["seed"] = seed;
        return !d.applicable || d.pass ? 0 : 1;
    }
    int verify(json& doc) {
        VerifyOptions v;
        v.seed = o_.seed;
        const Report r = verify_all(*g_, cd_, table(), v);
        doc["report"] = io::to_json(r);
        std::size_t failed = 0;
        for (const auto& e : r.entries) failed += !e.pass;
        doc["checks"] = r.entries.size();
        doc["failed"] = failed;
        return r.ok() ? 0 : 1;
    }

    const Options& o_;
    io::Cache cache_;
    std::unique_ptr<FiniteGroup> g_;
    ClassData cd_;
    std::unique_ptr<GoodPartition> part_;
    std::unique_ptr<StructTensor> tensor_;
    std::unique_ptr<CharacterTable> ct_;
    std::unique_ptr<PartitionAnalysis> an_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition-algebra computations on finite groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--builtin", o.builtin, "Builtin group, e.g. Sn:4, D:8, Q8, SL2:3, Zn:2xZn:4");
    app.add_option("--table", o.table, "Cayley table file (1-based, first line the order)");
    app.add_option("--perm", o.perm, "Permutation generators file (cycle notation)");
    app.add_option("--partition", o.partition, "trivial | rational | galois=t,.. | coset=c,.. | subgroup=c,.. | custom=b;b");
    app.add_option("-p,--prime", o.prime, "Prime for pprime / mckay");
    app.add_option("--subfield", o.subfield, "Subfield for mckay: trivial | rational | galois=t,..");
    app.add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", o.cache_dir, "Directory for cached class data, tables and tensors");
    app.add_option("--seed", o.seed, "Random seed (recorded in every report)");
    app.add_option("--bound", o.bound, "Refuse groups larger than this");
    app.add_option("--out", o.out, "Write the report here instead of stdout");
    app.add_flag("--brute", o.brute, "Element-level counting where supported");
    app.add_option("--trials", o.trials, "Random points for detcheck");
    app.add_option("--convention", o.convention, "partition | ordinary (pijl, reconstruct)");
    app.add_flag("--timing", o.timing, "Add wall-clock time to the report");
    app.add_option("--other", o.other, "Second group for compare: builtin:X | table:PATH | perm:PATH");
    app.add_option("--element", o.element, "Comma-separated block coefficients for charpoly");
    app.add_option("--automorphism", o.automorphisms, "Residues tested for Galois-fixed counts in mckay");
    const std::vector<std::pair<std::string, std::string>> commands{
        {"classes", "Conjugacy classes, sizes, orders, power maps"},
        {"partition", "Validate a partition of the classes"},
        {"structconst", "Structure constants a_lij"},
        {"gram", "Gram matrix Tr(A_i A_j) and its determinant"},
        {"charpoly", "Characteristic polynomials of algebra elements"},
        {"casimir", "Generalized Casimir matrix and its characteristic polynomial"},
        {"chartable", "Exact character table"},
        {"frobpoly", "Frobenius polynomial as a product of linear forms"},
        {"degpoly", "Degree polynomial by both routes"},
        {"pprime", "p'-part of the degree polynomial"},
        {"pijl", "Generalized commutator counts p_i, p_ij, p_ijl"},
        {"reconstruct", "Rebuild tensor and forms from the Frobenius polynomial and from triple counts"},
        {"mckay", "Compare p'-degree polynomials of G and a Sylow normalizer"},
        {"lattice", "Normal-subgroup lattice from closed class sets"},
        {"compare", "Frobenius polynomials of two groups up to a permutation of variables"},
        {"detcheck", "Collapsed group determinant against the Frobenius polynomial"},
        {"verify-all", "Run every invariant check on one group"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    json doc;
    int status = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
        Runner runner(o, std::cerr);
        status = runner.run(cmd, doc);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const VerificationError& e) {
        doc["verification_error"] = e.what();
        status = 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    if (o.timing)
        doc["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::string text = o.format == "json" ? doc.dump(2) + "\n" : io::render_text(doc);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!(f << text)) {
            std::cerr << "input error: cannot write " << o.out << '\n';
            return 2;
        }
    }
    return status;
}
