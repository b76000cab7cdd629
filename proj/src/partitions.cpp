#include "partalg/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "partalg/kernels.hpp"

namespace partalg {

using kernels::kUncovered;

std::string to_string(PartitionKind k) {
    switch (k) {
        case PartitionKind::Trivial: return "trivial";
        case PartitionKind::Galois: return "galois";
        case PartitionKind::Rational: return "rational";
        case PartitionKind::Coset: return "coset";
        case PartitionKind::Subgroup: return "subgroup";
        case PartitionKind::Custom: return "custom";
    }
    return "?";
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long long parse_ll(std::string tok, const std::string& ctx) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InputError("bad integer '" + tok + "' in partition spec '" + ctx + "'");
    }
}

std::vector<std::size_t> parse_class_list(const std::string& s, const std::string& ctx) {
    std::vector<std::size_t> out;
    for (const auto& tok : split(s, ',')) {
        const long long v = parse_ll(tok, ctx);
        if (v < 0) throw InputError("negative class index in '" + ctx + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw InputError("empty class list in '" + ctx + "'");
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

// Closure of the residues under multiplication mod m; all must be units.
std::vector<unsigned> close_residues(const std::vector<long long>& t, unsigned m) {
    std::set<unsigned> group{1 % m};
    std::vector<unsigned> gens;
    for (long long r : t) {
        long long v = r % static_cast<long long>(m);
        if (v < 0) v += m;
        if (std::gcd(static_cast<unsigned>(v), m) != 1 && m > 1)
            throw InputError("galois residue " + std::to_string(r) + " is not a unit mod " + std::to_string(m));
        gens.push_back(static_cast<unsigned>(v));
    }
    std::vector<unsigned> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<unsigned> next;
        for (unsigned x : frontier)
            for (unsigned g : gens) {
                const unsigned y = static_cast<unsigned>((static_cast<unsigned long long>(x) * g) % m);
                if (group.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

// Element set of a union of classes; throws unless it is a normal subgroup.
std::vector<bool> normal_subgroup_mask(const FiniteGroup& g, const ClassData& cd, const std::vector<std::size_t>& cls,
                                       const std::string& ctx) {
    std::vector<bool> in(g.order(), false);
    for (std::size_t c : cls) {
        if (c >= cd.n_classes) throw InputError("class index " + std::to_string(c) + " out of range in '" + ctx + "'");
        for (Elem x : cd.members[c]) in[x] = true;
    }
    if (!in[0]) throw InputError("'" + ctx + "': the class list must contain the identity class 0");
    std::vector<Elem> elems;
    for (Elem x = 0; x < g.order(); ++x)
        if (in[x]) elems.push_back(x);
    for (Elem a : elems)
        for (Elem b : elems)
            if (!in[g.mul(a, b)])
                throw InputError("'" + ctx + "': classes do not form a normal subgroup (product of elements " +
                                 std::to_string(a) + " and " + std::to_string(b) + " leaves it)");
    return in;
}

void finalize_layout(const FiniteGroup& g, const ClassData& cd, GoodPartition& p) {
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    std::sort(p.blocks.begin(), p.blocks.end());
    p.block_of.assign(cd.n_classes, kUncovered);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (std::size_t c : p.blocks[b]) {
            if (c >= cd.n_classes) throw InputError("class index " + std::to_string(c) + " out of range");
            if (p.block_of[c] != kUncovered) throw InputError("class " + std::to_string(c) + " appears twice");
            p.block_of[c] = static_cast<long>(b);
        }
    if (p.blocks.empty() || p.block_of[0] != 0) throw InputError("partition must cover the identity class");
    p.sizes.assign(p.blocks.size(), 0);
    p.elements.assign(p.blocks.size(), {});
    p.elem_block.assign(g.order(), kUncovered);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        for (std::size_t c : p.blocks[b])
            for (Elem x : cd.members[c]) {
                p.elements[b].push_back(x);
                p.elem_block[x] = static_cast<long>(b);
            }
        std::sort(p.elements[b].begin(), p.elements[b].end());
        p.sizes[b] = p.elements[b].size();
    }
    // inverse block from the inverse of the representative; validated separately
    p.inverse_block.assign(p.blocks.size(), 0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const long ib = p.block_of[cd.inverse_class[p.blocks[b][0]]];
        p.inverse_block[b] = ib == kUncovered ? b : static_cast<std::size_t>(ib);
    }
}

}  // namespace

PartitionSpec PartitionSpec::galois(std::vector<long long> t) {
    PartitionSpec s;
    s.kind = PartitionKind::Galois;
    s.residues = std::move(t);
    return s;
}

PartitionSpec PartitionSpec::parse(const std::string& text) {
    PartitionSpec s;
    const auto eq = text.find('=');
    const std::string head = text.substr(0, eq);
    const std::string body = eq == std::string::npos ? "" : text.substr(eq + 1);
    if (head == "trivial" && eq == std::string::npos) return s;
    if (head == "rational" && eq == std::string::npos) {
        s.kind = PartitionKind::Rational;
        return s;
    }
    if (eq == std::string::npos) throw InputError("unknown partition spec '" + text + "'");
    if (head == "galois") {
        s.kind = PartitionKind::Galois;
        for (const auto& tok : split(body, ',')) s.residues.push_back(parse_ll(tok, text));
        if (s.residues.empty()) throw InputError("galois= needs at least one residue");
    } else if (head == "coset") {
        s.kind = PartitionKind::Coset;
        s.classes = parse_class_list(body, text);
    } else if (head == "subgroup") {
        s.kind = PartitionKind::Subgroup;
        s.classes = parse_class_list(body, text);
    } else if (head == "custom") {
        s.kind = PartitionKind::Custom;
        for (const auto& blk : split(body, ';')) s.blocks.push_back(parse_class_list(blk, text));
    } else {
        throw InputError("unknown partition kind '" + head + "'");
    }
    return s;
}

std::string PartitionSpec::to_string() const {
    switch (kind) {
        case PartitionKind::Trivial: return "trivial";
        case PartitionKind::Rational: return "rational";
        case PartitionKind::Galois: {
            std::string s = "galois=";
            for (std::size_t k = 0; k < residues.size(); ++k) s += (k ? "," : "") + std::to_string(residues[k]);
            return s;
        }
        case PartitionKind::Coset: return "coset=" + join(classes);
        case PartitionKind::Subgroup: return "subgroup=" + join(classes);
        case PartitionKind::Custom: {
            std::string s = "custom=";
            for (std::size_t k = 0; k < blocks.size(); ++k) s += (k ? ";" : "") + join(blocks[k]);
            return s;
        }
    }
    return "?";
}

std::string ValidationReport::describe() const {
    std::ostringstream os;
    os << "inverse closure: " << (inverse_closed ? "pass" : "FAIL " + inverse_witness) << '\n';
    os << "product closure: " << (product_closed ? "pass" : "FAIL " + product_witness) << '\n';
    os << "identity: " << (has_identity ? "pass" : "FAIL " + identity_witness) << '\n';
    return os.str();
}

GoodPartition make_blocks(const FiniteGroup& g, const ClassData& cd, const PartitionSpec& spec) {
    GoodPartition p;
    p.spec = spec;
    p.group_order = g.order();
    p.n_classes = cd.n_classes;
    switch (spec.kind) {
        case PartitionKind::Trivial:
            for (std::size_t c = 0; c < cd.n_classes; ++c) p.blocks.push_back({c});
            break;
        case PartitionKind::Galois:
        case PartitionKind::Rational: {
            std::vector<long long> t = spec.residues;
            if (spec.kind == PartitionKind::Rational)
                for (unsigned r = 1; r <= cd.exponent; ++r)
                    if (std::gcd(r, cd.exponent) == 1) t.push_back(r);
            p.galois_group = close_residues(t, cd.exponent);
            std::vector<bool> seen(cd.n_classes, false);
            for (std::size_t c = 0; c < cd.n_classes; ++c) {
                if (seen[c]) continue;
                std::set<std::size_t> orbit;
                for (unsigned r : p.galois_group) orbit.insert(cd.power_class(c, r));
                for (std::size_t o : orbit) seen[o] = true;
                p.blocks.emplace_back(orbit.begin(), orbit.end());
            }
            break;
        }
        case PartitionKind::Coset: {
            const auto in_n = normal_subgroup_mask(g, cd, spec.classes, spec.to_string());
            std::vector<Elem> nelems;
            for (Elem x = 0; x < g.order(); ++x)
                if (in_n[x]) nelems.push_back(x);
            // coset label: smallest element of xN
            std::vector<Elem> label(g.order());
            for (Elem x = 0; x < g.order(); ++x) {
                Elem m = x;
                for (Elem y : nelems) m = std::min(m, g.mul(x, y));
                label[x] = m;
            }
            std::map<std::vector<Elem>, std::vector<std::size_t>> by_image;
            for (std::size_t c = 0; c < cd.n_classes; ++c) {
                std::set<Elem> img;
                for (Elem x : cd.members[c]) img.insert(label[x]);
                by_image[std::vector<Elem>(img.begin(), img.end())].push_back(c);
            }
            for (auto& [img, cls] : by_image) p.blocks.push_back(cls);
            break;
        }
        case PartitionKind::Subgroup: {
            normal_subgroup_mask(g, cd, spec.classes, spec.to_string());
            std::set<std::size_t> cls(spec.classes.begin(), spec.classes.end());
            for (std::size_t c : cls) p.blocks.push_back({c});
            break;
        }
        case PartitionKind::Custom:
            p.blocks = spec.blocks;
            break;
    }
    finalize_layout(g, cd, p);
    return p;
}

ValidationReport validate_good_partition(const GoodPartition& p, const FiniteGroup& g) {
    ValidationReport r;
    // condition 1: inverses of a block form a block
    for (std::size_t b = 0; b < p.n() && r.inverse_closed; ++b) {
        const std::size_t ib = p.inverse_block[b];
        for (Elem x : p.elements[b]) {
            const long bx = p.elem_block[g.inv(x)];
            if (bx != static_cast<long>(ib)) {
                r.inverse_closed = false;
                r.inverse_witness = "element " + std::to_string(x) + " of block " + std::to_string(b) +
                                    " has its inverse " + (bx == kUncovered ? "outside the partition" : "in block " + std::to_string(bx)) +
                                    " while the representative's inverse lies in block " + std::to_string(ib);
                break;
            }
        }
        if (r.inverse_closed && p.sizes[ib] != p.sizes[b]) {
            r.inverse_closed = false;
            r.inverse_witness = "block " + std::to_string(b) + " and its inverse block differ in size";
        }
    }
    // condition 2: products expand with block-constant coefficients
    const auto bp = kernels::block_products(g, p.elements, p.elem_block);
    if (bp.witness) {
        const auto& w = *bp.witness;
        r.product_closed = false;
        std::ostringstream os;
        os << "C" << w.i << "*C" << w.j << ": ";
        if (w.block == kUncovered)
            os << "product hits element " << w.x << " outside the partition (" << w.count_y << " times)";
        else
            os << "elements " << w.x << " and " << w.y << " of block " << w.block << " occur " << w.count_x << " and "
               << w.count_y << " times";
        r.product_witness = os.str();
    }
    // condition 3: an identity exists
    if (r.product_closed) {
        StructTensor t;
        t.n = bp.n;
        t.a.assign(bp.a.begin(), bp.a.end());
        if (!algebra_identity(t)) {
            r.has_identity = false;
            r.identity_witness = "the system sum_i c_i a_{lij} = delta_{lj} has no solution";
        }
    } else {
        r.has_identity = false;
        r.identity_witness = "not checked (product closure failed)";
    }
    return r;
}

GoodPartition build_partition(const FiniteGroup& g, const ClassData& cd, const PartitionSpec& spec) {
    GoodPartition p = make_blocks(g, cd, spec);
    const ValidationReport r = validate_good_partition(p, g);
    if (!r.ok()) throw InputError("'" + spec.to_string() + "' is not a good partition:\n" + r.describe());
    p.identity_coeffs = *algebra_identity(structure_constants(g, p));
    return p;
}

StructTensor structure_constants(const FiniteGroup& g, const GoodPartition& p, bool parallel) {
    const auto bp = parallel ? kernels::block_products(g, p.elements, p.elem_block)
                             : kernels::serial::block_products(g, p.elements, p.elem_block);
    if (bp.witness) throw VerificationError("structure constants are not constant on blocks");
    StructTensor t;
    t.n = bp.n;
    t.a.assign(bp.a.begin(), bp.a.end());
    check_tensor_invariants(p, t);
    return t;
}

void check_tensor_invariants(const GoodPartition& p, const StructTensor& t) {
    const std::size_t n = t.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t rowsum = 0;
            for (std::size_t l = 0; l < n; ++l) {
                if (t.at(l, i, j) != t.at(l, j, i))
                    throw VerificationError("tensor not symmetric at (" + std::to_string(l) + "," + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
                rowsum += t.at(l, i, j) * static_cast<std::int64_t>(p.sizes[l]);
                // l_{ijl} = l_l a_{l'ij} is invariant under rotation (i, j, l) -> (j, l, i)
                const auto lhs = static_cast<std::int64_t>(p.sizes[l]) * t.at(p.inverse_block[l], i, j);
                const auto rhs = static_cast<std::int64_t>(p.sizes[i]) * t.at(p.inverse_block[i], j, l);
                if (lhs != rhs) throw VerificationError("cyclic invariance of solution counts fails");
            }
            if (rowsum != static_cast<std::int64_t>(p.sizes[i] * p.sizes[j]))
                throw VerificationError("row-sum identity fails for (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

std::optional<std::vector<Rat>> algebra_identity(const StructTensor& t) {
    const std::size_t n = t.n;
    // rows (l, j), columns c_0..c_{n-1} | rhs
    const std::size_t rows = n * n;
    RatMatrix a(rows, n + 1);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) a(l * n + j, i) = t.at(l, i, j);
            a(l * n + j, n) = l == j ? 1 : 0;
        }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t k = 0; k <= n; ++k) std::swap(a(piv, k), a(r, k));
        const Rat inv = 1 / a(r, col);
        for (std::size_t k = col; k <= n; ++k) a(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, col) == 0) continue;
            const Rat f = a(i, col);
            for (std::size_t k = col; k <= n; ++k) a(i, k) -= f * a(r, k);
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a(i, n) != 0) return std::nullopt;
    std::vector<Rat> c(n, Rat(0));  // free variables set to zero
    for (std::size_t k = 0; k < pivot_col.size(); ++k) c[pivot_col[k]] = a(k, n);
    return c;
}

Int solution_count(const GoodPartition& p, const StructTensor& t, const std::vector<std::size_t>& idx) {
    const std::size_t r = idx.size();
    if (r == 0) return 1;
    if (r == 1) return idx[0] == 0 ? 1 : 0;
    if (r == 2) return idx[1] == p.inverse_block[idx[0]] ? Int(static_cast<unsigned long>(p.sizes[idx[0]])) : Int(0);
    if (r == 3)
        return Int(static_cast<unsigned long>(p.sizes[idx[2]])) *
               Int(static_cast<long>(t.at(p.inverse_block[idx[2]], idx[0], idx[1])));
    // split off the last two indices: l_{I j'...} through l_{..j} l_{j' i_{r-1} i_r} / l_j
    Rat acc = 0;
    std::vector<std::size_t> head(idx.begin(), idx.end() - 2);
    head.push_back(0);
    for (std::size_t j = 0; j < t.n; ++j) {
        const Int tail = solution_count(p, t, {p.inverse_block[j], idx[r - 2], idx[r - 1]});
        if (tail == 0) continue;
        head.back() = j;
        acc += Rat(solution_count(p, t, head) * tail) / Rat(static_cast<unsigned long>(p.sizes[j]));
    }
    acc.canonicalize();
    if (acc.get_den() != 1) throw VerificationError("solution count is not an integer");
    return acc.get_num();
}

}  // namespace partalg
