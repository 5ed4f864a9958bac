// Command-line front end: build the named complexes, certify them, tabulate
// Betti numbers and closed-form tables, run the independent Koszul oracle,
// diff tables, and render three-variable complexes as SVG.
//
// Exit status: 0 = certified / success, 1 = mathematical failure (failed
// certification, table mismatch, broken complex), 2 = usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "boxres/betti.hpp"
#include "boxres/complex_json.hpp"
#include "boxres/constructions.hpp"
#include "boxres/formulas.hpp"
#include "boxres/homology.hpp"
#include "boxres/ideal.hpp"
#include "boxres/render.hpp"
#include "boxres/resolution.hpp"

namespace {

using namespace boxres;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Shared options for the subcommands that construct a complex in memory.
struct BuildSpec {
    int n = 0;
    std::string object;
    int perm = 1;
    std::vector<int> indices;
};

void add_build_options(CLI::App* cmd, BuildSpec& spec) {
    cmd->add_option("--n", spec.n, "number of variables")->required();
    cmd->add_option("--object", spec.object,
                    "power | pinched | star | star-hat | box-complex | product")
        ->required();
    cmd->add_option("--perm", spec.perm, "rotation index for box-complex (1-based)");
    cmd->add_option("--indices", spec.indices,
                    "rotation indices for product (1-based, comma separated)")
        ->delimiter(',');
}

LabelledComplex build_from_spec(const BuildSpec& spec) {
    ComplexRequest req;
    req.n = spec.n;
    req.object = spec.object;
    req.perm = spec.perm;
    req.indices = spec.indices;
    return build_complex(req);
}

// Options appearing on every certification-flavoured subcommand.
struct CheckSpec {
    long long characteristic = 32003;
    int threads = 1;
    bool exhaustive = false;
};

void add_check_options(CLI::App* cmd, CheckSpec& spec) {
    cmd->add_option("--char", spec.characteristic,
                    "coefficient field characteristic (0 = rationals)");
    cmd->add_option("--threads", spec.threads, "worker threads for the sweep")
        ->envname("BOXRES_THREADS");
    cmd->add_flag("--exhaustive", spec.exhaustive,
                  "sweep all divisors of the label lcm, not just the lcm closure");
}

FieldSpec field_of(const CheckSpec& spec) {
    FieldSpec k{spec.characteristic};
    k.validate();
    return k;
}

// Runs the full certificate (d^2, minimality, acyclicity sweep) and prints
// the pinned report format.  Returns true when everything passed.
bool report_verification(const LabelledComplex& x, const CheckSpec& check) {
    const FieldSpec k = field_of(check);
    const bool d2 = x.d2_holds();
    std::cout << "d2=" << (d2 ? "ok" : "fail") << "\n";

    bool minimal = false;
    try {
        minimal = is_minimal(free_complex(x));
    } catch (const std::logic_error&) {
        minimal = false;  // inconsistent differential counts as non-minimal
    }
    std::cout << "minimal=" << (minimal ? "yes" : "no") << "\n";

    SweepOptions opts;
    opts.threads = check.threads;
    opts.exhaustive = check.exhaustive;
    const SweepReport report = acyclicity_sweep(x, k, opts);
    for (const SweepFailure& f : report.failures) {
        for (std::size_t j = 0; j < f.homology.size(); ++j) {
            if (j >= 1 && f.homology[j] != 0) {
                std::cout << "ALPHA " << f.alpha.str() << " H~" << (j - 1) << "="
                          << f.homology[j] << "\n";
            }
        }
    }
    std::cout << "checked=" << report.checked << " failures="
              << static_cast<long long>(report.failures.size()) << "\n";
    return d2 && minimal && report.ok();
}

int cmd_build(const BuildSpec& spec, const std::string& output, bool with_differentials) {
    const LabelledComplex x = build_from_spec(spec);
    write_output(output, complex_to_json(x, with_differentials));
    return 0;
}

int cmd_verify(const std::string& input, const CheckSpec& check) {
    const LabelledComplex x = complex_from_json(read_file(input));
    return report_verification(x, check) ? 0 : 1;
}

int cmd_betti(const std::string& input, const BuildSpec& spec, const CheckSpec& check,
              const std::string& output) {
    const LabelledComplex x =
        input.empty() ? build_from_spec(spec) : complex_from_json(read_file(input));
    const FieldSpec k = field_of(check);
    SweepOptions opts;
    opts.threads = check.threads;
    opts.exhaustive = check.exhaustive;
    const SweepReport report = acyclicity_sweep(x, k, opts);
    if (!x.d2_holds() || !report.ok() || !is_minimal(free_complex(x))) {
        std::cerr << "certification failed; betti numbers not defined\n";
        return 1;
    }
    write_output(output, betti_from_complex(x, report).to_csv());
    return 0;
}

int cmd_formulas(int n, const std::string& table, const std::string& output) {
    std::string text;
    bool found = table.empty();
    for (const FormulaTable& f : all_formulas(n)) {
        if (!table.empty() && f.name != table) continue;
        found = true;
        if (table.empty()) text += "# " + f.name + "\n";
        text += f.table.to_csv();
    }
    if (!found) throw std::invalid_argument("unknown table: " + table);
    write_output(output, text);
    return 0;
}

MonomialIdeal named_ideal(int n, const std::string& tag) {
    if (tag == "power") return power_ideal(n, n);
    if (tag == "pinched") return remove_generator(power_ideal(n, n), center_monomial(n));
    if (tag == "star") return star_ideal(n);
    if (tag == "star-hat") return remove_generator(star_ideal(n), center_monomial(n));
    throw std::invalid_argument("unknown ideal tag: " + tag);
}

int cmd_oracle(const std::string& gens_path, int n, const std::string& ideal_tag,
               const CheckSpec& check, const std::string& output) {
    MonomialIdeal ideal;
    if (!gens_path.empty()) {
        ideal = parse_generator_file(read_file(gens_path));
    } else {
        if (n == 0 || ideal_tag.empty()) {
            throw std::invalid_argument("oracle needs --gens FILE or --n N --ideal TAG");
        }
        ideal = named_ideal(n, ideal_tag);
    }
    const FieldSpec k = field_of(check);
    write_output(output, koszul_betti_oracle(ideal, k, check.threads).to_csv());
    return 0;
}

int cmd_compare(const std::string& expected_path, const std::string& actual_path) {
    const BettiTable expected = BettiTable::from_csv(read_file(expected_path));
    const BettiTable actual = BettiTable::from_csv(read_file(actual_path));
    const std::vector<BettiDiff> diffs = betti_diff(expected, actual);
    if (diffs.empty()) {
        std::cout << "tables identical\n";
        return 0;
    }
    std::cout << "p,q,expected,actual\n";
    for (const BettiDiff& d : diffs) {
        std::cout << d.p << "," << d.q << "," << d.expected << "," << d.actual << "\n";
    }
    return 1;
}

int cmd_render(const std::string& input, const std::string& output) {
    const LabelledComplex x = complex_from_json(read_file(input));
    write_output(output, render_svg(x));
    return 0;
}

int cmd_fvector(const std::string& input, const BuildSpec& spec) {
    const LabelledComplex x =
        input.empty() ? build_from_spec(spec) : complex_from_json(read_file(input));
    const std::vector<long long> f = x.f_vector();
    std::string line;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) line += ",";
        line += std::to_string(f[i]);
    }
    std::cout << line << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"box-complex resolutions: build, certify, tabulate, render"};
    app.require_subcommand(1);

    // build
    BuildSpec build_spec;
    std::string build_output;
    bool build_diffs = false;
    CLI::App* build = app.add_subcommand("build", "construct a complex and emit JSON");
    add_build_options(build, build_spec);
    build->add_option("-o,--output", build_output, "output path (default: stdout)");
    build->add_flag("--differentials", build_diffs, "include free-complex differentials");

    // verify
    std::string verify_input;
    CheckSpec verify_check;
    CLI::App* verify = app.add_subcommand("verify", "certify a complex JSON file");
    verify->add_option("--input", verify_input, "complex JSON file")->required();
    add_check_options(verify, verify_check);

    // betti
    std::string betti_input, betti_output;
    BuildSpec betti_spec;
    CheckSpec betti_check;
    CLI::App* betti =
        app.add_subcommand("betti", "Betti table of a certified complex as CSV");
    betti->add_option("--input", betti_input, "complex JSON file (instead of --n/--object)");
    betti->add_option("--n", betti_spec.n, "number of variables");
    betti->add_option("--object", betti_spec.object, "complex tag (see build)");
    betti->add_option("--perm", betti_spec.perm, "rotation index for box-complex");
    betti->add_option("--indices", betti_spec.indices, "rotation indices for product")
        ->delimiter(',');
    add_check_options(betti, betti_check);
    betti->add_option("-o,--output", betti_output, "output path (default: stdout)");

    // formulas
    int formulas_n = 0;
    std::string formulas_table, formulas_output;
    CLI::App* formulas = app.add_subcommand("formulas", "closed-form Betti tables as CSV");
    formulas->add_option("--n", formulas_n, "number of variables")->required();
    formulas->add_option("--table", formulas_table,
                         "one of gamma | power | pinched | star | star-hat");
    formulas->add_option("-o,--output", formulas_output, "output path (default: stdout)");

    // oracle
    std::string oracle_gens, oracle_tag, oracle_output;
    int oracle_n = 0;
    CheckSpec oracle_check;
    CLI::App* oracle =
        app.add_subcommand("oracle", "independent Koszul Betti oracle as CSV");
    oracle->add_option("--gens", oracle_gens, "generator file (one exponent list per line)");
    oracle->add_option("--n", oracle_n, "number of variables (with --ideal)");
    oracle->add_option("--ideal", oracle_tag, "power | pinched | star | star-hat");
    add_check_options(oracle, oracle_check);
    oracle->add_option("-o,--output", oracle_output, "output path (default: stdout)");

    // compare
    std::string compare_expected, compare_actual;
    CLI::App* compare = app.add_subcommand("compare", "diff two Betti CSV files");
    compare->add_option("expected", compare_expected, "expected CSV")->required();
    compare->add_option("actual", compare_actual, "actual CSV")->required();

    // render
    std::string render_input, render_output;
    CLI::App* render = app.add_subcommand("render", "SVG rendering (n = 3 only)");
    render->add_option("--input", render_input, "complex JSON file")->required();
    render->add_option("-o,--output", render_output, "output path (default: stdout)");

    // fvector
    std::string fvector_input;
    BuildSpec fvector_spec;
    CLI::App* fvector = app.add_subcommand("fvector", "face counts by dimension");
    fvector->add_option("--input", fvector_input, "complex JSON file");
    fvector->add_option("--n", fvector_spec.n, "number of variables");
    fvector->add_option("--object", fvector_spec.object, "complex tag (see build)");
    fvector->add_option("--perm", fvector_spec.perm, "rotation index for box-complex");
    fvector->add_option("--indices", fvector_spec.indices, "rotation indices for product")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help requests exit 0; usage errors exit 2
    }

    try {
        if (build->parsed()) return cmd_build(build_spec, build_output, build_diffs);
        if (verify->parsed()) return cmd_verify(verify_input, verify_check);
        if (betti->parsed()) {
            if (betti_input.empty() && (betti_spec.n == 0 || betti_spec.object.empty())) {
                throw std::invalid_argument("betti needs --input or --n/--object");
            }
            return cmd_betti(betti_input, betti_spec, betti_check, betti_output);
        }
        if (formulas->parsed())
            return cmd_formulas(formulas_n, formulas_table, formulas_output);
        if (oracle->parsed())
            return cmd_oracle(oracle_gens, oracle_n, oracle_tag, oracle_check, oracle_output);
        if (compare->parsed()) return cmd_compare(compare_expected, compare_actual);
        if (render->parsed()) return cmd_render(render_input, render_output);
        if (fvector->parsed()) {
            if (fvector_input.empty() &&
                (fvector_spec.n == 0 || fvector_spec.object.empty())) {
                throw std::invalid_argument("fvector needs --input or --n/--object");
            }
            return cmd_fvector(fvector_input, fvector_spec);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // Broken mathematics: d^2 violations, orientation conflicts,
        // inconsistent cell data.
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
