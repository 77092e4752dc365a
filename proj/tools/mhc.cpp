// mhc: Hochschild and cyclic homology of monogenic extensions.
//
//   mhc hh      --spec PATH [--max-degree N] [--decompose] [--closed-form] [--oracle] [--basis] [--json]
//   mhc hc      --spec PATH [same flags]
//   mhc verify  --spec PATH [--max-degree N] [--json]
//   mhc example NAME [-o FILE]
//
// Exit codes: 0 ok, 1 invalid input, 2 identity failure.

#include "mhc/cyclic.hpp"
#include "mhc/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0, kInvalid = 1, kIdentity = 2;

struct Common {
    std::string spec;
    std::size_t max_degree = 6;
    bool json = false;
    mhc::ReportOptions flags;
};

void add_common(CLI::App* sub, Common& c, bool homology_flags) {
    sub->add_option("--spec", c.spec, "spec file, example name (taft:3) or alias (taft3)")->required();
    sub->add_option("--max-degree", c.max_degree, "top degree of the complexes (reports degrees below it)")
        ->check(CLI::Range(1, 40));
    sub->add_flag("--json", c.json, "emit the report as one JSON object");
    if (!homology_flags) return;
    sub->add_flag("--decompose", c.flags.decompose, "per-eigencomponent breakdown");
    sub->add_flag("--closed-form", c.flags.closed_form, "compare with every closed formula whose hypotheses hold");
    sub->add_flag("--oracle", c.flags.oracle, "compare with the normalized bar complex");
    sub->add_flag("--basis", c.flags.basis, "print homology representatives");
}

void emit(const nlohmann::json& report, bool as_json) {
    if (as_json) std::cout << report.dump(2) << '\n';
    else std::cout << mhc::render_human(report);
}

int run(const std::function<int()>& body) {
    try {
        return body();
    } catch (const mhc::IdentityFailure& e) {
        std::cerr << "identity failure: " << e.what() << '\n';
        return kIdentity;
    } catch (const mhc::SpecError& e) {
        std::cerr << "spec error: " << e.what() << '\n';
        return kInvalid;
    } catch (const mhc::ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild and cyclic homology of noncommutative monogenic extensions"};
    app.require_subcommand(1);

    Common hh, hc, ver;
    auto* hh_cmd = app.add_subcommand("hh", "Hochschild homology H^K_*(A, M)");
    add_common(hh_cmd, hh, true);
    auto* hc_cmd = app.add_subcommand("hc", "cyclic homology HC^K_*(A)");
    add_common(hc_cmd, hc, true);
    auto* ver_cmd = app.add_subcommand("verify", "run the identity suite");
    add_common(ver_cmd, ver, false);

    std::string example_name, example_out;
    auto* ex_cmd = app.add_subcommand("example", "print a built-in spec document");
    ex_cmd->add_option("name", example_name,
                       "trunc:n, sweedler, taft:n, rank1:c4, rank1nc:c2xc4, rank1nc:c8, dihedral:u, or an alias")
        ->required();
    ex_cmd->add_option("-o,--output", example_out, "write to FILE instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (*hh_cmd || *hc_cmd) {
        Common& c = *hh_cmd ? hh : hc;
        return run([&] {
            if (c.max_degree < 2) throw std::invalid_argument("--max-degree must be at least 2");
            mhc::ParsedSpec spec = mhc::load_spec(c.spec);
            c.flags.max_degree = c.max_degree;
            emit(*hh_cmd ? mhc::hh_report(spec, c.flags) : mhc::hc_report(spec, c.flags), c.json);
            return kOk;
        });
    }
    if (*ver_cmd) {
        return run([&] {
            if (ver.max_degree < 2) throw std::invalid_argument("--max-degree must be at least 2");
            mhc::ParsedSpec spec = mhc::load_spec(ver.spec);
            auto report = mhc::verify_report(spec, ver.max_degree);
            emit(report, ver.json);
            return report["all_pass"].get<bool>() ? kOk : kIdentity;
        });
    }
    return run([&] {
        std::string name = mhc::resolve_alias(example_name).value_or(example_name);
        nlohmann::json doc = mhc::example_spec(name);
        mhc::parse_spec(doc);  // never emit something that does not validate
        std::string text = doc.dump(2) + "\n";
        if (example_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(example_out);
            if (!f) throw std::invalid_argument("cannot write " + example_out);
            f << text;
        }
        return kOk;
    });
}
