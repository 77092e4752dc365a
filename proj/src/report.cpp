#include "mhc/report.hpp"

#include "mhc/cyclic.hpp"
#include "mhc/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace mhc {

using nlohmann::json;

namespace {

const Bimodule& module_of(const ParsedSpec& s, std::unique_ptr<Bimodule>& holder) {
    if (s.bimodule) return *s.bimodule;
    holder = std::make_unique<Bimodule>(Bimodule::regular(*s.algebra));
    return *holder;
}

json algebra_summary(const ParsedSpec& s) {
    const MonogenicAlgebra& a = *s.algebra;
    json j{{"field", a.field()->name()},
           {"dim_K", a.dim_k()},
           {"n", a.n()},
           {"dim_A", a.dim_a()},
           {"K_basis", a.base().labels()},
           {"module", s.bimodule ? "custom bimodule of dimension " + std::to_string(s.bimodule->dim()) : "A"}};
    if (!a.family.empty()) j["family"] = {{"name", a.family}, {"param", a.family_param}};
    return j;
}

json comparison(const std::vector<std::size_t>& computed, const std::vector<std::size_t>& other, bool& agrees) {
    json rows = json::array();
    agrees = true;
    for (std::size_t r = 0; r < computed.size() && r < other.size(); ++r) {
        bool m = computed[r] == other[r];
        agrees = agrees && m;
        rows.push_back({{"degree", r}, {"computed", computed[r]}, {"predicted", other[r]}, {"match", m}});
    }
    return rows;
}

json refused(const std::string& why) { return {{"status", "refused"}, {"reason", why}}; }

std::string format_element(const ParsedSpec& s, const Vec& v) {
    if (!s.bimodule) return s.algebra->format(v);
    return to_string(v);
}

void add_mode(json& r, const std::string& mode, const std::vector<std::size_t>& dims,
              const std::vector<std::size_t>& reference) {
    r["modes"][mode] = dims;
    if (dims != reference) r["warnings"].push_back("mode '" + mode + "' disagrees with the generic computation");
}

}  // namespace

json hypothesis_summary(const ParsedSpec& s, std::size_t max_degree) {
    const MonogenicAlgebra& a = *s.algebra;
    json h;
    unsigned w = collapse_window(a, max_degree);
    CollapseReport c = check_collapse(a, w);
    json fails = json::array();
    for (const auto& e : c.entries)
        if (!e.full) fails.push_back({{"j", e.j}, {"commutator_dim", e.commutator_dim}});
    h["collapse"] = {{"holds", c.holds}, {"window", w}, {"failures", fails}};
    if (s.lambda_breve) {
        LambdaBreveReport lb = verify_lambda_breve(a, *s.lambda_breve);
        h["lambda_breve"] = {{"given", true}, {"value", a.base().format(*s.lambda_breve)}, {"ok", lb.ok}};
        if (!lb.ok) h["lambda_breve"]["failure"] = lb.failure;
    } else {
        h["lambda_breve"] = {{"given", false}};
    }
    h["alpha"] = {{"identity", a.alpha().is_identity()}, {"diagonal", a.alpha().is_diagonal()}};
    h["alpha"]["order"] = a.alpha_order() ? json(*a.alpha_order()) : json(nullptr);
    auto v = alpha_n_order(a);
    h["alpha"]["order_of_alpha_n"] = v ? json(*v) : json(nullptr);
    if (a.alpha().is_diagonal()) {
        json comps = json::array();
        for (const auto& e : eigen_split(a.base(), a.alpha())) {
            if (e.basis.empty()) continue;
            json labels = json::array();
            for (auto i : e.basis) labels.push_back(a.base().labels()[i]);
            comps.push_back({{"eigenvalue", e.eigenvalue.str()}, {"basis", labels}});
        }
        h["eigencomponents"] = comps;
    }
    if (a.rank1) {
        h["rank1"] = {{"case", to_string(a.rank1->kase)}};
        if (!a.rank1->rewrite_log.empty()) h["rank1"]["rewrite"] = a.rank1->rewrite_log;
    }
    h["notes"] = a.notes;
    return h;
}

json hh_report(const ParsedSpec& s, const ReportOptions& opt) {
    const MonogenicAlgebra& a = *s.algebra;
    const std::size_t D = opt.max_degree;
    std::unique_ptr<Bimodule> holder;
    const Bimodule& M = module_of(s, holder);
    json r;
    r["command"] = "hh";
    r["spec"] = s.name;
    r["max_degree"] = D;
    r["algebra"] = algebra_summary(s);
    r["hypotheses"] = hypothesis_summary(s, D);
    r["warnings"] = json::array();
    bool collapse = r["hypotheses"]["collapse"]["holds"].get<bool>();
    if (!collapse) r["warnings"].push_back("collapse hypothesis fails; generic small complex used");

    ChainComplex cs = build_cs(a, M, D);
    auto dims = homology_dims(cs, D - 1);
    r["dimensions"] = dims;
    r["modes"]["generic"] = dims;
    if (collapse && !s.bimodule) add_mode(r, "collapsed", homology_dims(build_cs_collapsed(a, D), D - 1), dims);

    if (opt.decompose) {
        if (s.bimodule) {
            r["decomposition"] = refused("decomposition is implemented for M = A only");
        } else {
            try {
                json comps = json::array();
                std::vector<std::size_t> total(D, 0);
                for (const auto& c : decompose(a, D)) {
                    auto h = homology_dims(c.complex, D - 1);
                    for (std::size_t i = 0; i < D; ++i) total[i] += h[i];
                    json labels = json::array();
                    for (auto i : c.basis) labels.push_back(a.base().labels()[i]);
                    comps.push_back({{"eigenvalue", c.eigenvalue.str()}, {"basis", labels}, {"dimensions", h}});
                }
                r["decomposition"] = {{"status", "evaluated"}, {"components", comps}, {"sum", total}};
                add_mode(r, "components", total, dims);
            } catch (const std::exception& e) {
                r["decomposition"] = refused(e.what());
            }
        }
    }
    if (opt.closed_form) {
        json forms = json::array();
        for (auto k : {ClosedFormKind::collapsed, ClosedFormKind::eigencomponents, ClosedFormKind::alpha_identity,
                       ClosedFormKind::rank1, ClosedFormKind::dihedral_display}) {
            json f;
            if (s.bimodule) {
                f = refused("closed forms are stated for M = A");
            } else {
                try {
                    ClosedForm cf = hh_closed_form(a, k, D - 1);
                    bool agrees = false;
                    f = {{"status", "evaluated"},
                         {"hypotheses_verified", cf.hypotheses_verified},
                         {"hypothesis_note", cf.hypothesis_note},
                         {"table", comparison(dims, cf.dims, agrees)},
                         {"notes", cf.notes}};
                    f["agrees"] = agrees;
                } catch (const std::exception& e) {
                    f = refused(e.what());
                }
            }
            f["kind"] = to_string(k);
            forms.push_back(f);
        }
        r["closed_forms"] = forms;
    }
    if (opt.oracle) {
        Resolution res(a);
        BarComplex bar(res, M);
        auto od = homology_dims(bar.complex(D), D - 1);
        bool agrees = false;
        r["oracle"] = {{"mode", "normalized bar complex"}, {"table", comparison(dims, od, agrees)}};
        r["oracle"]["agrees"] = agrees;
        r["modes"]["oracle"] = od;
    }
    if (opt.basis) {
        json reps = json::array();
        for (std::size_t k = 0; k < D; ++k) {
            HomologyReport h = homology(cs, k, true);
            json e = json::array();
            for (const auto& v : h.ambient_representatives) e.push_back(format_element(s, v));
            reps.push_back({{"degree", k}, {"representatives", e}});
        }
        r["basis"] = reps;
    }
    return r;
}

json hc_report(const ParsedSpec& s, const ReportOptions& opt) {
    if (s.bimodule) throw ValidationError("cyclic homology needs M = A; drop the bimodule section");
    const MonogenicAlgebra& a = *s.algebra;
    const std::size_t D = opt.max_degree;
    json r;
    r["command"] = "hc";
    r["spec"] = s.name;
    r["max_degree"] = D;
    r["algebra"] = algebra_summary(s);
    r["hypotheses"] = hypothesis_summary(s, D);
    r["warnings"] = json::array();
    bool collapse = r["hypotheses"]["collapse"]["holds"].get<bool>();
    if (!collapse) r["warnings"].push_back("collapse hypothesis fails; generic small complex used");

    MixedComplex mc = build_mixed(a, D, true);
    auto dims = hc_dims(mc, D - 1);
    r["dimensions"] = dims;
    r["modes"]["generic"] = dims;
    r["connes_D"] = "closed formula, equal to psi B phi in degrees < " + std::to_string(D);
    if (collapse) add_mode(r, "collapsed", hc_dims(build_mixed_collapsed(a, D), D - 1), dims);

    if (opt.decompose) {
        try {
            json comps = json::array();
            std::vector<std::size_t> total(D, 0);
            for (const auto& c : build_mixed_components(a, D)) {
                auto h = hc_dims(c.mixed, D - 1);
                for (std::size_t i = 0; i < D; ++i) total[i] += h[i];
                json labels = json::array();
                for (auto i : c.component.basis) labels.push_back(a.base().labels()[i]);
                comps.push_back({{"eigenvalue", c.component.eigenvalue.str()}, {"basis", labels}, {"dimensions", h}});
            }
            r["decomposition"] = {{"status", "evaluated"}, {"components", comps}, {"sum", total}};
            add_mode(r, "components", total, dims);
        } catch (const std::exception& e) {
            r["decomposition"] = refused(e.what());
        }
    }
    if (opt.closed_form) {
        json forms = json::array();
        for (auto k : {ClosedFormKind::eigencomponents, ClosedFormKind::rank1, ClosedFormKind::dihedral_display}) {
            json f;
            try {
                CyclicClosedForm cf = hc_closed_form(a, k, D - 1);
                json rows = json::array();
                bool proof_ok = true, shown_ok = true;
                for (std::size_t i = 0; i < dims.size(); ++i) {
                    bool mp = dims[i] == cf.dims[i], md = dims[i] == cf.displayed_dims[i];
                    proof_ok = proof_ok && mp;
                    shown_ok = shown_ok && md;
                    rows.push_back({{"degree", i},
                                    {"computed", dims[i]},
                                    {"predicted", cf.dims[i]},
                                    {"displayed_reading", cf.displayed_dims[i]},
                                    {"match", mp},
                                    {"match_displayed_reading", md}});
                }
                std::string which = proof_ok && shown_ok ? "both readings"
                                    : proof_ok           ? "cycle-condition reading (exponent m+1)"
                                    : shown_ok           ? "displayed reading (exponent m)"
                                                         : "neither reading";
                f = {{"status", "evaluated"},
                     {"hypotheses_verified", cf.hypotheses_verified},
                     {"hypothesis_note", cf.hypothesis_note},
                     {"readings_differ", cf.readings_differ},
                     {"computation_matches", which},
                     {"agrees", proof_ok},
                     {"table", rows},
                     {"notes", cf.notes}};
            } catch (const std::exception& e) {
                f = refused(e.what());
            }
            f["kind"] = to_string(k);
            forms.push_back(f);
        }
        r["closed_forms"] = forms;
    }
    if (opt.oracle) {
        Resolution res(a);
        Bimodule reg = Bimodule::regular(a);
        BarComplex bar(res, reg);
        auto od = hc_dims(bar_mixed(bar, D), D - 1);
        bool agrees = false;
        r["oracle"] = {{"mode", "BC total of the normalized bar mixed complex"}, {"table", comparison(dims, od, agrees)}};
        r["oracle"]["agrees"] = agrees;
        r["modes"]["oracle"] = od;
    }
    if (opt.basis) {
        json reps = json::array();
        for (std::size_t N = 0; N < D; ++N) {
            ChainComplex tot = bc_total(mc, N + 1);
            HomologyReport h = homology(tot, N, true);
            auto off = total_offsets(mc, N);
            json e = json::array();
            for (const auto& v : h.representatives) {
                json cols = json::object();
                for (std::size_t p = 0; 2 * p <= N; ++p) {
                    std::size_t deg = N - 2 * p;
                    const auto& sp = mc.complex.spaces[deg];
                    Vec q = zero_vec(sp.quotient_dim, a.field());
                    for (const auto& [i, x] : v)
                        if (i >= off[p] && i < off[p + 1]) q[i - off[p]] = x;
                    if (!is_zero(q)) cols["C" + std::to_string(deg)] = a.format(sp.lift(q));
                }
                e.push_back(cols);
            }
            reps.push_back({{"degree", N}, {"representatives", e}});
        }
        r["basis"] = reps;
    }
    return r;
}

json verify_report(const ParsedSpec& s, std::size_t max_degree) {
    VerifyOptions opt;
    opt.max_degree = max_degree;
    auto checks = run_identity_suite(*s.algebra, opt);
    json r;
    r["command"] = "verify";
    r["spec"] = s.name;
    r["max_degree"] = max_degree;
    r["algebra"] = algebra_summary(s);
    r["hypotheses"] = hypothesis_summary(s, max_degree);
    json cs = json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name}, {"window", c.window}, {"pass", c.pass}, {"detail", c.detail}});
    r["checks"] = cs;
    r["all_pass"] = all_pass(checks);
    return r;
}

// ---------------------------------------------------------------- human rendering

namespace {

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "NO";
    return v.dump();
}

void table(std::ostringstream& os, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        os << " ";
        for (std::size_t i = 0; i < r.size(); ++i) os << ' ' << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        os << '\n';
    };
    line(head);
    std::vector<std::string> rule;
    for (auto x : w) rule.push_back(std::string(x, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
}

void render_hypotheses(std::ostringstream& os, const json& h) {
    const json& c = h["collapse"];
    os << "collapse: " << (c["holds"].get<bool>() ? "holds" : "fails") << " (checked j <= " << c["window"] << ")";
    if (!c["failures"].empty())
        os << ", first failure j = " << c["failures"][0]["j"] << " with dim [K,K]_{alpha^j} = "
           << c["failures"][0]["commutator_dim"];
    os << '\n';
    const json& lb = h["lambda_breve"];
    if (lb["given"].get<bool>())
        os << "lambda-breve: " << lb["value"].get<std::string>() << " "
           << (lb["ok"].get<bool>() ? "accepted" : "rejected: " + lb.value("failure", std::string())) << '\n';
    const json& al = h["alpha"];
    os << "alpha: " << (al["identity"].get<bool>() ? "identity" : al["diagonal"].get<bool>() ? "diagonal" : "general")
       << ", order " << cell(al["order"]) << ", order of alpha^n " << cell(al["order_of_alpha_n"]) << '\n';
    if (h.contains("rank1")) os << "rank-1 case: " << h["rank1"]["case"].get<std::string>() << '\n';
    for (const auto& n : h["notes"]) os << "note: " << n.get<std::string>() << '\n';
}

}  // namespace

std::string render_human(const json& r) {
    std::ostringstream os;
    const std::string cmd = r["command"];
    const json& al = r["algebra"];
    os << cmd << " for " << r["spec"].get<std::string>() << ": field " << al["field"].get<std::string>() << ", dim K = "
       << al["dim_K"] << ", n = " << al["n"] << ", dim A = " << al["dim_A"] << '\n';
    render_hypotheses(os, r["hypotheses"]);
    if (cmd == "verify") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : r["checks"])
            rows.push_back({c["pass"].get<bool>() ? "pass" : "FAIL", c["name"], c["window"], c["detail"]});
        os << '\n';
        table(os, {"", "check", "window", "detail"}, rows);
        os << '\n' << (r["all_pass"].get<bool>() ? "all identities hold" : "IDENTITY FAILURE") << '\n';
        return os.str();
    }
    for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << '\n';
    std::string H = cmd == "hh" ? "HH" : "HC";
    std::vector<std::string> head{"degree"};
    std::vector<std::string> modes;
    for (const char* m : {"generic", "collapsed", "components", "oracle"})
        if (r["modes"].contains(m)) modes.push_back(m);
    for (const auto& m : modes) head.push_back(m);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < r["dimensions"].size(); ++k) {
        std::vector<std::string> row{H + "_" + std::to_string(k)};
        for (const auto& m : modes) row.push_back(cell(r["modes"][m][k]));
        rows.push_back(row);
    }
    os << '\n';
    table(os, head, rows);
    if (r.contains("decomposition")) {
        const json& d = r["decomposition"];
        os << "\neigencomponents: ";
        if (d["status"] == "refused") {
            os << "refused (" << d["reason"].get<std::string>() << ")\n";
        } else {
            os << '\n';
            std::vector<std::vector<std::string>> cr;
            for (const auto& c : d["components"]) {
                std::string dims;
                for (const auto& x : c["dimensions"]) dims += (dims.empty() ? "" : " ") + x.dump();
                std::string basis;
                for (const auto& b : c["basis"]) basis += (basis.empty() ? "" : ",") + b.get<std::string>();
                cr.push_back({c["eigenvalue"], basis, dims});
            }
            table(os, {"eigenvalue", "basis", "dimensions"}, cr);
        }
    }
    if (r.contains("closed_forms")) {
        for (const auto& f : r["closed_forms"]) {
            os << "\nclosed form " << f["kind"].get<std::string>() << ": ";
            if (f["status"] == "refused") {
                os << "refused (" << f["reason"].get<std::string>() << ")\n";
                continue;
            }
            os << (f["agrees"].get<bool>() ? "agrees" : "DISAGREES") << " ("
               << (f["hypotheses_verified"].get<bool>() ? "hypotheses verified" : "hypotheses NOT verified") << ": "
               << f["hypothesis_note"].get<std::string>() << ")\n";
            if (f.contains("computation_matches"))
                os << "  computed dimensions match: " << f["computation_matches"].get<std::string>() << '\n';
            bool two = f["table"].size() > 0 && f["table"][0].contains("displayed_reading");
            std::vector<std::vector<std::string>> fr;
            for (const auto& row : f["table"]) {
                std::vector<std::string> x{row["degree"].dump(), row["computed"].dump(), row["predicted"].dump(),
                                           cell(row["match"])};
                if (two) {
                    x.push_back(row["displayed_reading"].dump());
                    x.push_back(cell(row["match_displayed_reading"]));
                }
                fr.push_back(x);
            }
            std::vector<std::string> fh{"degree", "computed", "predicted", "match"};
            if (two) {
                fh.push_back("displayed");
                fh.push_back("match");
            }
            table(os, fh, fr);
            for (const auto& n : f["notes"]) os << "  note: " << n.get<std::string>() << '\n';
        }
    }
    if (r.contains("oracle"))
        os << "\noracle (" << r["oracle"]["mode"].get<std::string>()
           << "): " << (r["oracle"]["agrees"].get<bool>() ? "agrees" : "DISAGREES") << '\n';
    if (r.contains("basis")) {
        os << "\nrepresentatives:\n";
        for (const auto& d : r["basis"]) {
            os << "  " << H << "_" << d["degree"] << ":";
            for (const auto& e : d["representatives"]) os << "  " << (e.is_string() ? e.get<std::string>() : e.dump());
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace mhc
