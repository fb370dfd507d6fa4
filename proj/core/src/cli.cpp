#include "coincal/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coincal/cokernel.hpp"
#include "coincal/grassmann.hpp"
#include "coincal/matrix_io.hpp"
#include "coincal/projective_bundle.hpp"
#include "coincal/report_io.hpp"
#include "coincal/smith.hpp"
#include "coincal/spheres.hpp"
#include "coincal/torus.hpp"
#include "coincal/validate.hpp"

namespace coincal {

namespace {

using json = nlohmann::ordered_json;

json matrix_to_json(const IntMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

std::string matrix_to_text(const IntMatrix& a, const std::string& indent) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out += indent;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ' ';
            out += a(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

// Emit a report with its validation block; nonzero result only when the
// report is inconsistent, which would be a defect in the tables themselves.
int emit_report(const InvariantReport& rep, std::size_t target_dim, bool selfcoincidence,
                const std::string& format, std::ostream& out) {
    const ValidationResult validation = validate_chain(rep, target_dim, selfcoincidence);
    if (format == "json")
        out << report_to_json(rep, validation) << '\n';
    else
        out << report_to_text(rep, validation);
    return validation.ok ? 0 : 2;
}

struct CliState {
    std::string format = "text";
    std::string matrix_text;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t r_nat = 0;
    std::size_t k = 0;
    std::size_t q = 0;
    long r_power = 0;
    std::int64_t hopf = 0;
    bool nullhomotopic = false;
    bool domain_not_torus = false;
};

void add_format_flag(CLI::App* sub, CliState& st) {
    sub->add_option("--format", st.format, "Output encoding: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

int run_snf(const CliState& st, std::ostream& out) {
    const IntMatrix a = parse_matrix(st.matrix_text);
    const SmithDecomposition d = smith_normal_form(a);
    if (st.format == "json") {
        json factors = json::array();
        for (const auto& f : d.factors) factors.push_back(f.get_str());
        json j = {{"matrix", matrix_to_json(a)},
                  {"factors", std::move(factors)},
                  {"rank", d.factors.size()},
                  {"u", matrix_to_json(d.u)},
                  {"s", matrix_to_json(d.s)},
                  {"v", matrix_to_json(d.v)}};
        out << j.dump(2) << '\n';
    } else {
        out << "factors =";
        for (const auto& f : d.factors) out << ' ' << f.get_str();
        out << "\nrank = " << d.factors.size() << '\n';
        out << "u:\n" << matrix_to_text(d.u, "  ");
        out << "s:\n" << matrix_to_text(d.s, "  ");
        out << "v:\n" << matrix_to_text(d.v, "  ");
    }
    return 0;
}

int run_torus(const CliState& st, bool n_given, std::ostream& out) {
    TorusInstance inst;
    inst.d = parse_matrix(st.matrix_text);
    inst.m = st.m;
    inst.n = n_given ? st.n : inst.d.rows();
    inst.domain_is_torus = !st.domain_not_torus;
    const InvariantReport rep = torus_invariants(inst);
    return emit_report(rep, inst.n, false, st.format, out);
}

int run_circle(const CliState& st, std::ostream& out) {
    const IntMatrix row = parse_matrix(st.matrix_text);
    const InvariantReport rep = circle_invariants(row, st.m);
    return emit_report(rep, 1, false, st.format, out);
}

int run_grassmann(const CliState& st, std::ostream& out) {
    const GrassmannInstance inst{st.r_nat, st.k};
    const InvariantReport rep = grassmann_selfcoincidence(inst);
    const std::size_t target_dim = grassmann_dims(st.r_nat, st.k).second;
    return emit_report(rep, target_dim, true, st.format, out);
}

int run_projective(const CliState& st, std::ostream& out) {
    const ProjectiveBundleInstance inst{st.q, st.r_power};
    const InvariantReport rep = projective_bundle_invariants(inst);
    return emit_report(rep, 2 * st.q, true, st.format, out);
}

int run_sphere(const CliState& st, std::ostream& out) {
    const InvariantReport rep = sphere_root_invariants(st.m, st.n, st.nullhomotopic);
    return emit_report(rep, st.n, false, st.format, out);
}

int run_hopf(const CliState& st, std::ostream& out) {
    const HopfDegreeReport rep = hopf_degrees(st.hopf);
    if (st.format == "json") {
        json j = {{"hopf", std::to_string(rep.hopf)},
                  {"omega_tilde",
                   {{"suspension", rep.suspension},
                    {"hopf_component", std::to_string(rep.hopf_component)}}},
                  {"omega", rep.omega},
                  {"homological", rep.homological}};
        out << j.dump(2) << '\n';
    } else {
        out << "hopf = " << rep.hopf << '\n'
            << "omega_tilde = (" << rep.suspension << ", " << rep.hopf_component << ")\n"
            << "omega = " << rep.omega << '\n'
            << "homological = " << rep.homological << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculator for Nielsen coincidence invariants"};
    app.name("coincal");
    app.require_subcommand(1);

    CliState st;

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("--matrix", st.matrix_text, "Matrix, rows separated by ';'")
        ->required();
    add_format_flag(snf, st);

    CLI::App* torus = app.add_subcommand(
        "torus", "Coincidence invariants for maps into the torus (S^1)^n");
    torus->add_option("--matrix", st.matrix_text,
                      "Matrix of f1* - f2* on H_1 (n rows)")
        ->required();
    torus->add_option("--m", st.m, "Domain dimension")->required();
    CLI::Option* torus_n =
        torus->add_option("--n", st.n, "Target dimension (defaults to the row count)");
    torus->add_flag("--domain-not-torus", st.domain_not_torus,
                    "Domain is a general manifold, not T^m");
    add_format_flag(torus, st);

    CLI::App* circle = app.add_subcommand(
        "circle", "Coincidence invariants for maps into the circle");
    circle->add_option("--matrix", st.matrix_text, "Single-row matrix of f1* - f2*")
        ->required();
    circle->add_option("--m", st.m, "Domain dimension")->required();
    add_format_flag(circle, st);

    CLI::App* grassmann = app.add_subcommand(
        "grassmann", "Selfcoincidence of the frame-to-span projection V_{r,k} -> G_{r,k}");
    grassmann->add_option("--r", st.r_nat, "Ambient dimension r")->required();
    grassmann->add_option("--k", st.k, "Frame size k")->required();
    add_format_flag(grassmann, st);

    CLI::App* projective = app.add_subcommand(
        "projective", "Selfcoincidence of the circle-bundle projection over CP(q)");
    projective->add_option("--q", st.q, "Complex projective dimension q > 1")->required();
    projective->add_option("--r", st.r_power, "Tensor power r")->required();
    add_format_flag(projective, st);

    CLI::App* sphere = app.add_subcommand(
        "sphere", "Root problem for maps S^m -> S^n, n >= 2");
    sphere->add_option("--m", st.m, "Domain dimension")->required();
    sphere->add_option("--n", st.n, "Target dimension (>= 2)")->required();
    sphere->add_flag("--nullhomotopic", st.nullhomotopic, "The map is nullhomotopic");
    add_format_flag(sphere, st);

    CLI::App* hopf = app.add_subcommand(
        "hopf", "Degrees of a class in pi_3(S^2) given by its Hopf invariant");
    hopf->add_option("--hopf", st.hopf, "Hopf invariant of the class")->required();
    add_format_flag(hopf, st);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (snf->parsed()) return run_snf(st, out);
        if (torus->parsed()) return run_torus(st, torus_n->count() > 0, out);
        if (circle->parsed()) return run_circle(st, out);
        if (grassmann->parsed()) return run_grassmann(st, out);
        if (projective->parsed()) return run_projective(st, out);
        if (sphere->parsed()) return run_sphere(st, out);
        if (hopf->parsed()) return run_hopf(st, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace coincal
