#include "mhc/spec_io.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace mhc {

using nlohmann::json;

namespace {

std::string join_path(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string join_path(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw SpecError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SpecError(where, "missing field '" + key + "'");
    return *it;
}

std::string need_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw SpecError(where, "expected a string");
    return j.get<std::string>();
}

long need_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SpecError(where, "expected an integer");
    return j.get<long>();
}

Vec parse_kvec(const json& j, const BaseAlgebra& k, const std::string& where) {
    Vec v = k.zero();
    if (j.is_array()) {
        if (j.size() != k.dim())
            throw SpecError(where, "expected " + std::to_string(k.dim()) + " coordinates, got " +
                                       std::to_string(j.size()));
        for (std::size_t i = 0; i < j.size(); ++i) v[i] = parse_scalar(j[i], k.field(), join_path(where, i));
        return v;
    }
    if (!j.is_object()) throw SpecError(where, "expected a K-vector (object label -> scalar, or array)");
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto idx = k.label_index(it.key());
        if (!idx) throw SpecError(join_path(where, it.key()), "unknown basis label '" + it.key() + "'");
        v[*idx] += parse_scalar(it.value(), k.field(), join_path(where, it.key()));
    }
    return v;
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const Field* f, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw SpecError(where, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw SpecError(join_path(where, i), "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_scalar(row[c], f, join_path(join_path(where, i), c));
    }
    return m;
}

const Field* parse_field(const json& j, const std::string& where) {
    std::string kind = need_string(need(j, "kind", where), join_path(where, "kind"));
    if (kind == "rationals") return rationals();
    if (kind != "cyclotomic") throw SpecError(join_path(where, "kind"), "expected 'rationals' or 'cyclotomic'");
    long d = need_int(need(j, "order", where), join_path(where, "order"));
    if (d < 1) throw SpecError(join_path(where, "order"), "cyclotomic order must be >= 1");
    return make_field(FieldKind::cyclotomic, static_cast<unsigned>(d));
}

BaseAlgebra parse_base(const json& j, const Field* f, const std::string& where) {
    std::string type = need_string(need(j, "type", where), join_path(where, "type"));
    if (type == "group") {
        std::vector<std::string> labels;
        const json& el = need(j, "elements", where);
        if (!el.is_array() || el.empty()) throw SpecError(join_path(where, "elements"), "expected a non-empty array");
        for (std::size_t i = 0; i < el.size(); ++i) labels.push_back(need_string(el[i], join_path(join_path(where, "elements"), i)));
        const json& tb = need(j, "table", where);
        std::string tw = join_path(where, "table");
        if (!tb.is_array() || tb.size() != labels.size()) throw SpecError(tw, "expected one row per element");
        std::vector<std::vector<std::string>> table;
        for (std::size_t i = 0; i < tb.size(); ++i) {
            if (!tb[i].is_array() || tb[i].size() != labels.size())
                throw SpecError(join_path(tw, i), "expected one entry per element");
            std::vector<std::string> row;
            for (std::size_t c = 0; c < tb[i].size(); ++c) row.push_back(need_string(tb[i][c], join_path(join_path(tw, i), c)));
            table.push_back(row);
        }
        return group_algebra(labels, table, f);
    }
    if (type != "structure_constants") throw SpecError(join_path(where, "type"), "expected 'group' or 'structure_constants'");
    std::vector<std::string> labels;
    const json& lb = need(j, "labels", where);
    if (!lb.is_array() || lb.empty()) throw SpecError(join_path(where, "labels"), "expected a non-empty array");
    for (std::size_t i = 0; i < lb.size(); ++i) labels.push_back(need_string(lb[i], join_path(join_path(where, "labels"), i)));
    std::size_t d = labels.size();
    auto label_of = [&](const std::string& s) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < d; ++i)
            if (labels[i] == s) return i;
        return std::nullopt;
    };
    auto kvec = [&](const json& v, const std::string& w) {
        Vec out = zero_vec(d, f);
        if (v.is_array()) {
            if (v.size() != d) throw SpecError(w, "expected " + std::to_string(d) + " coordinates");
            for (std::size_t i = 0; i < d; ++i) out[i] = parse_scalar(v[i], f, join_path(w, i));
        } else if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it) {
                auto idx = label_of(it.key());
                if (!idx) throw SpecError(join_path(w, it.key()), "unknown basis label '" + it.key() + "'");
                out[*idx] += parse_scalar(it.value(), f, join_path(w, it.key()));
            }
        } else {
            throw SpecError(w, "expected a K-vector");
        }
        return out;
    };
    const json& pr = need(j, "products", where);
    std::string pw = join_path(where, "products");
    if (!pr.is_array() || pr.size() != d) throw SpecError(pw, "expected a dim x dim array of K-vectors");
    std::vector<std::vector<Vec>> products(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!pr[i].is_array() || pr[i].size() != d) throw SpecError(join_path(pw, i), "expected " + std::to_string(d) + " entries");
        for (std::size_t c = 0; c < d; ++c) products[i].push_back(kvec(pr[i][c], join_path(join_path(pw, i), c)));
    }
    Vec unit = kvec(need(j, "unit", where), join_path(where, "unit"));
    return BaseAlgebra(f, labels, products, unit);
}

std::vector<Scalar> parse_character(const json& j, const BaseAlgebra& k, const std::string& where) {
    std::vector<Scalar> chi(k.dim(), Scalar::one(k.field()));
    std::vector<bool> seen(k.dim(), false);
    if (j.is_array()) {
        if (j.size() != k.dim()) throw SpecError(where, "expected one value per group element");
        for (std::size_t i = 0; i < j.size(); ++i) chi[i] = parse_scalar(j[i], k.field(), join_path(where, i));
        return chi;
    }
    if (!j.is_object()) throw SpecError(where, "expected an object label -> scalar");
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto idx = k.label_index(it.key());
        if (!idx) throw SpecError(join_path(where, it.key()), "unknown group element '" + it.key() + "'");
        chi[*idx] = parse_scalar(it.value(), k.field(), join_path(where, it.key()));
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < k.dim(); ++i)
        if (!seen[i]) throw SpecError(where, "no value for group element '" + k.labels()[i] + "'");
    return chi;
}

struct Rank1Setup {
    BaseAlgebra k;
    std::vector<Scalar> chi;
    std::vector<Vec> lambdas;
    Rank1Info info;
};

// k[G][x, chi]/(x^n - xi(g1^n - 1)), including the rewrite over G/<g1^n>
// when chi^n is not trivial.
Rank1Setup rank1_setup(const BaseAlgebra& k, const std::vector<Scalar>& chi, std::size_t n, const json& j,
                       const std::string& where) {
    if (!k.group()) throw SpecError(where, "rank1 extensions need a group base algebra");
    const GroupData& g = *k.group();
    std::string gl = need_string(need(j, "g1", where), join_path(where, "g1"));
    auto g1 = k.label_index(gl);
    if (!g1) throw SpecError(join_path(where, "g1"), "unknown group element '" + gl + "'");
    Scalar xi = parse_scalar(need(j, "xi", where), k.field(), join_path(where, "xi"));
    std::size_t g1n = g.power(*g1, static_cast<unsigned>(n));

    Rank1Setup out{k, chi, std::vector<Vec>(n, k.zero()), Rank1Info{}};
    out.info.g1 = *g1;
    out.info.xi = xi;
    out.info.chi = chi;
    if (xi.is_zero()) {
        out.info.kase = Rank1Info::Case::xi_zero;
        return out;
    }
    bool chi_n_trivial = true;
    for (const auto& c : chi) chi_n_trivial = chi_n_trivial && c.pow(static_cast<long>(n)).is_one();
    if (chi_n_trivial) {
        out.info.kase = Rank1Info::Case::chi_n_trivial;
        // f = x^n - xi(g1^n - 1), so lambda_n = xi - xi g1^n
        Vec ln = k.zero();
        ln[g.identity] += xi;
        ln[g1n] -= xi;
        out.lambdas[n - 1] = ln;
        return out;
    }
    out.info.kase = Rank1Info::Case::chi_n_nontrivial;
    for (std::size_t h = 0; h < k.dim(); ++h)
        if (g.mul(h, g1n) != g.mul(g1n, h))
            throw ValidationError("rank1: g1^n = " + k.labels()[g1n] + " is not central, G/<g1^n> is undefined");
    if (!chi[g1n].is_one())
        throw ValidationError("rank1: chi(g1^n) != 1, so chi does not descend to G/<g1^n>");
    // cosets of H = <g1^n>
    std::vector<std::size_t> subgroup{g.identity};
    for (std::size_t p = g1n; p != g.identity; p = g.mul(p, g1n)) subgroup.push_back(p);
    std::vector<long> coset(k.dim(), -1);
    std::vector<std::size_t> reps;
    for (std::size_t a = 0; a < k.dim(); ++a) {
        if (coset[a] >= 0) continue;
        for (std::size_t h : subgroup) coset[g.mul(a, h)] = static_cast<long>(reps.size());
        reps.push_back(a);
    }
    std::vector<std::string> labels;
    for (std::size_t r : reps) labels.push_back(k.labels()[r]);
    std::vector<std::vector<std::string>> table(reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) table[a].push_back(labels[coset[g.mul(reps[a], reps[b])]]);
    out.k = group_algebra(labels, table, k.field());
    out.chi.clear();
    for (std::size_t r : reps) out.chi.push_back(chi[r]);
    out.info.chi = out.chi;
    out.info.g1 = static_cast<std::size_t>(coset[*g1]);
    out.lambdas.assign(n, out.k.zero());
    std::ostringstream log;
    log << "chi^n != id: rewrote k[G] (|G| = " << k.dim() << ") over k[G/<g1^n>] with g1^n = " << k.labels()[g1n]
        << " (|G/<g1^n>| = " << reps.size() << "), f = x^" << n;
    out.info.rewrite_log = log.str();
    return out;
}

}  // namespace

Scalar parse_scalar(const json& j, const Field* f, const std::string& where) {
    try {
        if (j.is_number_integer()) return Scalar(f, {mpq_class(j.get<long>())});
        if (j.is_string()) return Scalar(f, {Scalar::parse_rational(j.get<std::string>()).rational()});
        if (j.is_array()) {
            std::vector<mpq_class> co;
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (j[i].is_number_integer()) co.emplace_back(j[i].get<long>());
                else if (j[i].is_string()) co.push_back(Scalar::parse_rational(j[i].get<std::string>()).rational());
                else throw SpecError(join_path(where, i), "expected \"p/q\"");
            }
            return Scalar(f, co);
        }
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception& e) {
        throw SpecError(where, e.what());
    }
    throw SpecError(where, "expected a scalar (\"p/q\" string or coefficient array)");
}

json scalar_to_json(const Scalar& s) {
    auto co = s.coeffs();
    if (co.size() == 1) return co[0].get_str();
    json a = json::array();
    for (const auto& c : co) a.push_back(c.get_str());
    return a;
}

ParsedSpec parse_spec(const json& doc) {
    if (!doc.is_object()) throw SpecError("", "spec document must be a JSON object");
    ParsedSpec out;
    out.document = doc;
    if (doc.contains("name")) out.name = need_string(doc["name"], "/name");

    const Field* f = parse_field(need(doc, "field", ""), "/field");
    BaseAlgebra k = parse_base(need(doc, "base_algebra", ""), f, "/base_algebra");

    const json& endo = need(doc, "endomorphism", "");
    std::string et = need_string(need(endo, "type", "/endomorphism"), "/endomorphism/type");
    std::optional<std::vector<Scalar>> chi;
    std::optional<Matrix> alpha_m;
    if (et == "character") {
        chi = parse_character(need(endo, "values", "/endomorphism"), k, "/endomorphism/values");
    } else if (et == "matrix") {
        const json& cols = need(endo, "columns", "/endomorphism");
        if (!cols.is_array() || cols.size() != k.dim())
            throw SpecError("/endomorphism/columns", "expected one image per basis element");
        std::vector<Vec> cs;
        for (std::size_t i = 0; i < cols.size(); ++i) cs.push_back(parse_kvec(cols[i], k, join_path("/endomorphism/columns", i)));
        alpha_m = Matrix::from_columns(cs, k.dim(), f);
    } else if (et == "identity") {
        alpha_m = Matrix::identity(k.dim(), f);
    } else {
        throw SpecError("/endomorphism/type", "expected 'character', 'matrix' or 'identity'");
    }

    const json& ext = need(doc, "extension", "");
    long nl = need_int(need(ext, "n", "/extension"), "/extension/n");
    if (nl < 2) throw ValidationError("degree n >= 2 required (got n = " + std::to_string(nl) + ")");
    std::size_t n = static_cast<std::size_t>(nl);
    std::vector<Vec> lambdas;
    std::optional<Rank1Info> r1;
    if (ext.contains("rank1")) {
        if (!chi) throw SpecError("/extension/rank1", "rank1 extensions need a character endomorphism");
        Rank1Setup s = rank1_setup(k, *chi, n, ext["rank1"], "/extension/rank1");
        k = s.k;
        chi = s.chi;
        lambdas = s.lambdas;
        r1 = s.info;
    } else {
        const json& lj = need(ext, "lambdas", "/extension");
        if (!lj.is_array() || lj.size() != n)
            throw SpecError("/extension/lambdas", "expected n = " + std::to_string(n) + " K-vectors lambda_1..lambda_n");
        for (std::size_t i = 0; i < n; ++i) lambdas.push_back(parse_kvec(lj[i], k, join_path("/extension/lambdas", i)));
    }

    AlgebraEndomorphism alpha = chi ? character_endomorphism(k, *chi) : AlgebraEndomorphism(k, *alpha_m);
    out.algebra = std::make_shared<MonogenicAlgebra>(validate_monogenic(k, alpha, n, lambdas));
    out.algebra->rank1 = r1;
    if (r1 && !r1->rewrite_log.empty()) out.algebra->notes.push_back(r1->rewrite_log);

    if (doc.contains("family")) {
        const json& fam = doc["family"];
        out.algebra->family = need_string(need(fam, "name", "/family"), "/family/name");
        if (fam.contains("param")) out.algebra->family_param = static_cast<unsigned>(need_int(fam["param"], "/family/param"));
    }
    if (doc.contains("lambda_breve")) out.lambda_breve = parse_kvec(doc["lambda_breve"], out.algebra->base(), "/lambda_breve");

    if (doc.contains("bimodule")) {
        const json& bm = doc["bimodule"];
        long dim = need_int(need(bm, "dim", "/bimodule"), "/bimodule/dim");
        if (dim < 1) throw SpecError("/bimodule/dim", "dimension must be positive");
        std::size_t d = static_cast<std::size_t>(dim);
        auto mats = [&](const char* key) {
            const json& arr = need(bm, key, "/bimodule");
            std::string w = join_path("/bimodule", key);
            if (!arr.is_array() || arr.size() != k.dim()) throw SpecError(w, "expected one matrix per K-basis element");
            std::vector<Matrix> ms;
            for (std::size_t i = 0; i < arr.size(); ++i) ms.push_back(parse_matrix(arr[i], d, d, f, join_path(w, i)));
            return ms;
        };
        auto lk = mats("left_k"), rk = mats("right_k");
        Matrix lx = parse_matrix(need(bm, "left_x", "/bimodule"), d, d, f, "/bimodule/left_x");
        Matrix rx = parse_matrix(need(bm, "right_x", "/bimodule"), d, d, f, "/bimodule/right_x");
        out.bimodule = std::make_shared<Bimodule>(*out.algebra, d, lk, rk, lx, rx);
    }
    return out;
}

ParsedSpec parse_spec_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SpecError("line " + std::to_string(line) + ", column " + std::to_string(col), "JSON syntax error");
    }
    return parse_spec(doc);
}

namespace {

using MulFn = std::function<std::size_t(std::size_t, std::size_t)>;

json group_json(const std::vector<std::string>& labels, const MulFn& mul) {
    json t = json::array();
    for (std::size_t a = 0; a < labels.size(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < labels.size(); ++b) row.push_back(labels[mul(a, b)]);
        t.push_back(row);
    }
    return json{{"type", "group"}, {"elements", labels}, {"table", t}};
}

std::string power_label(const std::string& g, unsigned k) {
    if (k == 0) return "";
    if (k == 1) return g;
    return g + "^" + std::to_string(k);
}

std::vector<std::string> cyclic_labels(unsigned n, const std::string& g) {
    std::vector<std::string> out{"1"};
    for (unsigned k = 1; k < n; ++k) out.push_back(power_label(g, k));
    return out;
}

json field_json(unsigned order) {
    if (order <= 1) return json{{"kind", "rationals"}};
    return json{{"kind", "cyclotomic"}, {"order", order}};
}

json zero_lambdas(std::size_t n) { return json::array_t(n, json::object()); }

unsigned parse_param(const std::string& s, const std::string& name) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size() || v < 1) throw std::invalid_argument("");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad parameter in example name '" + name + "'");
    }
}

json taft(unsigned n, const std::string& name) {
    const Field* f = make_field(FieldKind::cyclotomic, n);
    auto labels = cyclic_labels(n, "g");
    json chi = json::object();
    for (unsigned k = 0; k < n; ++k) chi[labels[k]] = scalar_to_json(Scalar::zeta(f, k));
    return json{{"name", name},
                {"family", {{"name", "taft"}, {"param", n}}},
                {"field", field_json(n)},
                {"base_algebra", group_json(labels, [n](std::size_t a, std::size_t b) { return (a + b) % n; })},
                {"endomorphism", {{"type", "character"}, {"values", chi}}},
                {"extension", {{"n", n}, {"rank1", {{"g1", "g"}, {"xi", "0"}}}}},
                {"lambda_breve", {{"g", "1"}}}};
}

}  // namespace

json example_spec(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);

    if (head == "trunc") {
        unsigned n = parse_param(arg, name);
        if (n < 2) throw std::invalid_argument("trunc:n needs n >= 2");
        return json{{"name", name},
                    {"family", {{"name", "trunc"}, {"param", n}}},
                    {"field", field_json(1)},
                    {"base_algebra", {{"type", "structure_constants"},
                                      {"labels", json::array({"1"})},
                                      {"products", json::array({json::array({json::array({"1"})})})},
                                      {"unit", json::array({"1"})}}},
                    {"endomorphism", {{"type", "identity"}}},
                    {"extension", {{"n", n}, {"lambdas", zero_lambdas(n)}}}};
    }
    if (head == "sweedler" && arg.empty()) return taft(2, "sweedler");
    if (head == "taft") {
        unsigned n = parse_param(arg, name);
        if (n < 2) throw std::invalid_argument("taft:n needs n >= 2");
        return taft(n, name);
    }
    if (name == "rank1:c4") {
        auto labels = cyclic_labels(4, "g");
        json chi = {{"1", "1"}, {"g", "-1"}, {"g^2", "1"}, {"g^3", "-1"}};
        return json{{"name", name},
                    {"family", {{"name", "rank1"}, {"param", 4}}},
                    {"field", field_json(1)},
                    {"base_algebra", group_json(labels, [](std::size_t a, std::size_t b) { return (a + b) % 4; })},
                    {"endomorphism", {{"type", "character"}, {"values", chi}}},
                    {"extension", {{"n", 2}, {"rank1", {{"g1", "g"}, {"xi", "1"}}}}},
                    {"lambda_breve", {{"g", "1"}}}};
    }
    if (name == "rank1nc:c2xc4") {
        // a of order 4, b of order 2; index a^i b^j -> i + 4j
        std::vector<std::string> labels;
        for (unsigned j = 0; j < 2; ++j)
            for (unsigned i = 0; i < 4; ++i) {
                std::string s = power_label("a", i) + (j ? "b" : "");
                labels.push_back(s.empty() ? "1" : s);
            }
        const Field* f = make_field(FieldKind::cyclotomic, 4);
        json chi = json::object();
        for (unsigned j = 0; j < 2; ++j)
            for (unsigned i = 0; i < 4; ++i) chi[labels[i + 4 * j]] = scalar_to_json(Scalar::zeta(f, i) * Scalar(j ? -1 : 1));
        auto mul = [](std::size_t p, std::size_t q) { return (p % 4 + q % 4) % 4 + 4 * ((p / 4 + q / 4) % 2); };
        return json{{"name", name},
                    {"family", {{"name", "rank1nc"}, {"param", 8}}},
                    {"field", field_json(4)},
                    {"base_algebra", group_json(labels, mul)},
                    {"endomorphism", {{"type", "character"}, {"values", chi}}},
                    {"extension", {{"n", 2}, {"rank1", {{"g1", "b"}, {"xi", "1"}}}}}};
    }
    if (name == "rank1nc:c8") {
        auto labels = cyclic_labels(8, "a");
        const Field* f = make_field(FieldKind::cyclotomic, 4);
        json chi = json::object();
        for (unsigned i = 0; i < 8; ++i) chi[labels[i]] = scalar_to_json(Scalar::zeta(f, i));
        return json{{"name", name},
                    {"family", {{"name", "rank1nc"}, {"param", 8}}},
                    {"field", field_json(4)},
                    {"base_algebra", group_json(labels, [](std::size_t a, std::size_t b) { return (a + b) % 8; })},
                    {"endomorphism", {{"type", "character"}, {"values", chi}}},
                    {"extension", {{"n", 2}, {"rank1", {{"g1", "a^2"}, {"xi", "1"}}}}}};
    }
    if (head == "dihedral") {
        unsigned u = parse_param(arg, name);
        if (u < 2) throw std::invalid_argument("dihedral:u needs u >= 2");
        // g^j h^l at index j + u*l; g^a h^l g^b h^m = g^{a + (-1)^l b} h^{l+m}
        std::vector<std::string> labels;
        for (unsigned l = 0; l < 2; ++l)
            for (unsigned j = 0; j < u; ++j) {
                std::string s = power_label("g", j) + (l ? "h" : "");
                labels.push_back(s.empty() ? "1" : s);
            }
        auto mul = [u](std::size_t p, std::size_t q) {
            std::size_t a = p % u, l = p / u, b = q % u, m = q / u;
            std::size_t j = l ? (a + u - b) % u : (a + b) % u;
            return j + u * ((l + m) % 2);
        };
        json chi = json::object();
        for (unsigned i = 0; i < 2 * u; ++i) chi[labels[i]] = i < u ? "1" : "-1";
        return json{{"name", name},
                    {"family", {{"name", "dihedral"}, {"param", u}}},
                    {"field", field_json(1)},
                    {"base_algebra", group_json(labels, mul)},
                    {"endomorphism", {{"type", "character"}, {"values", chi}}},
                    {"extension", {{"n", 2}, {"lambdas", zero_lambdas(2)}}},
                    {"lambda_breve", {{"g", "1"}}}};
    }
    throw std::invalid_argument("unknown example '" + name +
                                "' (expected trunc:n, sweedler, taft:n, rank1:c4, rank1nc:c2xc4, rank1nc:c8, dihedral:u)");
}

std::optional<std::string> resolve_alias(const std::string& name) {
    static const std::map<std::string, std::string> fixed = {
        {"sweedler", "sweedler"},         {"rank1c4", "rank1:c4"},       {"rank1nc", "rank1nc:c2xc4"},
        {"rank1nc_c2xc4", "rank1nc:c2xc4"}, {"rank1nc_c8", "rank1nc:c8"},
    };
    if (auto it = fixed.find(name); it != fixed.end()) return it->second;
    if (name.find(':') != std::string::npos) return name;
    auto digits = name.find_first_of("0123456789");
    if (digits == std::string::npos) return std::nullopt;
    std::string head = name.substr(0, digits), num = name.substr(digits);
    if (num.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    unsigned v = static_cast<unsigned>(std::stoul(num));
    if (head == "trunc" || head == "taft") return head + ":" + num;
    if (head == "dihedral") {
        // dihedralN names the group of order N
        if (v % 2 != 0 || v < 4) return std::nullopt;
        return "dihedral:" + std::to_string(v / 2);
    }
    return std::nullopt;
}

ParsedSpec load_spec(const std::string& path_or_name) {
    if (std::filesystem::is_regular_file(path_or_name)) {
        std::ifstream in(path_or_name);
        std::stringstream ss;
        ss << in.rdbuf();
        ParsedSpec p = parse_spec_text(ss.str());
        if (p.name.empty()) p.name = std::filesystem::path(path_or_name).stem().string();
        return p;
    }
    auto name = resolve_alias(path_or_name);
    if (!name) throw std::invalid_argument("no spec file or example named '" + path_or_name + "'");
    return parse_spec(example_spec(*name));
}

const std::vector<std::string>& shipped_fixtures() {
    static const std::vector<std::string> names = {"trunc3", "sweedler", "taft3", "rank1c4", "dihedral6", "rank1nc_c2xc4"};
    return names;
}

}  // namespace mhc
