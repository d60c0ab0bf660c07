#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rep/cohomology.hpp"
#include "rep/errors.hpp"
#include "rep/hilbert.hpp"
#include "rep/parse.hpp"
#include "rep/report.hpp"
#include "rep/repscheme.hpp"

namespace {

using namespace rep;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int relation_degree(const NCPolynomial& f) {
    int deg = 0;
    for (const auto& [w, c] : f.terms()) deg = std::max(deg, w.degree());
    return deg;
}

AlgebraFile load_algebra(const std::string& path, InputDigest& digest) {
    const std::string text = read_file(path);
    digest.feed(text);
    AlgebraFile alg = parse_algebra(text);
    for (const auto& rel : alg.presentation.relations)
        if (relation_degree(rel) > 8)
            std::cerr << "warning: relation of degree " << relation_degree(rel)
                      << " (cost grows as n^(2*deg))\n";
    return alg;
}

RepPoint load_point(const std::string& path, const Presentation& pres, InputDigest& digest) {
    const std::string text = read_file(path);
    digest.feed(text);
    return parse_point(text, pres.num_generators());
}

std::vector<Rat> load_vector(const std::string& path, InputDigest& digest) {
    const std::string text = read_file(path);
    digest.feed(text);
    return parse_vector(text);
}

ResolutionStep load_resolution(const std::string& path, const Presentation& pres,
                               InputDigest& digest) {
    const std::string text = read_file(path);
    digest.feed(text);
    return parse_resolution(text, pres);
}

unsigned long default_seed() {
    if (const char* env = std::getenv("REPSCHEME_SEED")) return std::stoul(env);
    return 0;
}

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json point_json(const RepPoint& p) {
    ordered_json out = ordered_json::array();
    for (const auto& x : p.matrices) out.push_back(matrix_json(x));
    return out;
}

std::string word_string(const Word& w, const std::vector<std::string>& names) {
    if (w.is_one()) return "1";
    std::string out;
    for (size_t k = 0; k < w.letters.size(); ++k) {
        if (k) out += "*";
        out += names[w.letters[k]];
    }
    return out;
}

ordered_json ext2_json(const Ext2Evidence& e) {
    ordered_json j;
    j["value"] = e.value;
    j["kind"] = e.exact ? "exact" : "upper_bound";
    return j;
}

void emit(const Report& report, bool as_json) {
    if (as_json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
}

int run(int argc, char** argv) {
    CLI::App app{"Representation schemes of finitely presented algebras: tangent spaces, Ext "
                 "dimensions, smoothness certificates and Nori-Hilbert operations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the machine-readable report");

    std::string alg_path, point_path, point_b_path, vector_path, direction_path, family_path;
    std::string resolution_path, output_path;
    int ideal_n = 1;
    int deform_order = 0;
    bool assume_coherent = false;
    unsigned long seed = default_seed();
    int tries = 32;

    auto* cmd_check = app.add_subcommand("check", "validate a representation point");
    cmd_check->add_option("alg", alg_path)->required();
    cmd_check->add_option("point", point_path)->required();

    auto* cmd_ideal = app.add_subcommand("ideal", "emit the generic-matrix ideal generators");
    cmd_ideal->add_option("alg", alg_path)->required();
    cmd_ideal->add_option("-n", ideal_n, "matrix size")->required();
    cmd_ideal->add_option("-o", output_path, "write the listing to a file");

    auto* cmd_tangent = app.add_subcommand("tangent", "tangent space at a point");
    cmd_tangent->add_option("alg", alg_path)->required();
    cmd_tangent->add_option("point", point_path)->required();

    auto* cmd_ext = app.add_subcommand("ext", "Ext dimensions at a point");
    cmd_ext->add_option("alg", alg_path)->required();
    cmd_ext->add_option("point", point_path)->required();
    cmd_ext->add_option("--resolution", resolution_path, "F2 -> F1 resolution step file");

    auto* cmd_smooth = app.add_subcommand("smooth-cert", "smoothness certificate at a point");
    cmd_smooth->add_option("alg", alg_path)->required();
    cmd_smooth->add_option("point", point_path)->required();
    cmd_smooth->add_flag("--assume-coherent", assume_coherent,
                         "assert that the algebra is coherent");
    cmd_smooth->add_option("--resolution", resolution_path, "F2 -> F1 resolution step file");

    auto* cmd_deform = app.add_subcommand("deform",
                                          "check a deformation direction; with --order, lift it");
    cmd_deform->add_option("alg", alg_path)->required();
    cmd_deform->add_option("point", point_path)->required();
    cmd_deform->add_option("direction", direction_path)->required();
    cmd_deform->add_option("--order", deform_order, "lift order N >= 2");

    auto* cmd_scan = app.add_subcommand("scan", "semicontinuity scan over a point family");
    cmd_scan->add_option("alg", alg_path)->required();
    cmd_scan->add_option("family", family_path)->required();
    cmd_scan->add_option("--resolution", resolution_path, "F2 -> F1 resolution step file");

    auto* cmd_cyclic = app.add_subcommand("cyclic", "Krylov span and cyclicity of a pair");
    cmd_cyclic->add_option("alg", alg_path)->required();
    cmd_cyclic->add_option("point", point_path)->required();
    cmd_cyclic->add_option("vector", vector_path)->required();

    auto* cmd_canon = app.add_subcommand("hilb-canon", "canonical form of a cyclic pair");
    cmd_canon->add_option("alg", alg_path)->required();
    cmd_canon->add_option("point", point_path)->required();
    cmd_canon->add_option("vector", vector_path)->required();

    auto* cmd_hdim = app.add_subcommand("hilb-dim", "local Hilb dimension at a cyclic pair");
    cmd_hdim->add_option("alg", alg_path)->required();
    cmd_hdim->add_option("point", point_path)->required();
    cmd_hdim->add_option("vector", vector_path)->required();

    auto* cmd_ab = app.add_subcommand("abelianize", "abelianization of the presentation");
    cmd_ab->add_option("alg", alg_path)->required();

    auto* cmd_iso = app.add_subcommand("iso", "module isomorphism test for two points");
    cmd_iso->add_option("alg", alg_path)->required();
    cmd_iso->add_option("pointA", point_path)->required();
    cmd_iso->add_option("pointB", point_b_path)->required();
    cmd_iso->add_option("--seed", seed, "seed for the randomized invertibility search");
    cmd_iso->add_option("--tries", tries, "number of randomized combinations");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;  // usage errors are exit 2; --help is 0
    }

    InputDigest digest;
    Report report;
    int exit_code = 0;

    if (app.got_subcommand(cmd_check)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        const CheckVerdict verdict = check_point(alg.presentation, p);
        report.command = "check";
        report.payload["valid"] = verdict.valid;
        ordered_json violations = ordered_json::array();
        for (const auto& v : verdict.violations) {
            ordered_json item;
            item["relation"] = v.relation;
            item["entry"] = {v.row, v.col};
            item["value"] = rat_to_string(v.value);
            violations.push_back(std::move(item));
        }
        report.payload["violations"] = std::move(violations);
        if (!verdict.valid) exit_code = 1;
    } else if (app.got_subcommand(cmd_ideal)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const auto generators = emit_ideal_generators(alg.presentation, ideal_n);
        std::ostringstream listing;
        for (const auto& g : generators) {
            listing << "# relation " << g.relation << ", entry (" << g.row << "," << g.col << ")\n";
            listing << comm_polynomial_to_string(g.poly, alg.presentation.generator_names) << "\n";
        }
        if (!output_path.empty()) {
            std::ofstream out(output_path);
            if (!out) throw UsageError("cannot write file: " + output_path);
            out << listing.str();
        }
        report.command = "ideal";
        report.payload["n"] = ideal_n;
        report.payload["count"] = generators.size();
        if (as_json) {
            ordered_json polys = ordered_json::array();
            for (const auto& g : generators) {
                ordered_json item;
                item["relation"] = g.relation;
                item["entry"] = {g.row, g.col};
                item["polynomial"] =
                    comm_polynomial_to_string(g.poly, alg.presentation.generator_names);
                polys.push_back(std::move(item));
            }
            report.payload["generators"] = std::move(polys);
        } else if (output_path.empty()) {
            report.inputs_digest = digest.hex();
            emit(report, false);
            std::cout << listing.str();
            return 0;
        }
    } else if (app.got_subcommand(cmd_tangent)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        const KernelBasis tangent = tangent_space(alg.presentation, p);
        report.command = "tangent";
        report.payload["tangent_dim"] = tangent.dimension;
    } else if (app.got_subcommand(cmd_ext)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        ResolutionStep res2;
        const bool have_res = !resolution_path.empty();
        if (have_res) res2 = load_resolution(resolution_path, alg.presentation, digest);
        const ExtReport ext = ext_dimensions(alg.presentation, p, have_res ? &res2 : nullptr);
        report.command = "ext";
        report.payload["ext0"] = ext.ext0;
        report.payload["ext1"] = ext.ext1;
        report.payload["ext2"] = ext2_json(ext.ext2);
        report.payload["tangent_dim"] = ext.tangent_dim;
        report.payload["inner_dim"] = ext.inner_dim;
    } else if (app.got_subcommand(cmd_smooth)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        ResolutionStep res2;
        const bool have_res = !resolution_path.empty();
        if (have_res) res2 = load_resolution(resolution_path, alg.presentation, digest);
        const SmoothCertificate cert =
            smooth_certificate(alg.presentation, p, assume_coherent, have_res ? &res2 : nullptr);
        report.command = "smooth-cert";
        report.payload["certified"] = cert.certified;
        if (!cert.certified) {
            switch (cert.reason) {
                case CertificateReason::CoherenceNotAsserted:
                    report.payload["reason"] = "coherence-not-asserted";
                    break;
                case CertificateReason::Ext2PossiblyNonzero:
                    report.payload["reason"] =
                        "ext2-possibly-nonzero(bound=" + std::to_string(cert.ext2_bound) + ")";
                    break;
                case CertificateReason::Ext2Nonzero:
                    report.payload["reason"] = "ext2-nonzero";
                    break;
                case CertificateReason::None:
                    break;
            }
        }
    } else if (app.got_subcommand(cmd_deform)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        const RepPoint dir_point = load_point(direction_path, alg.presentation, digest);
        if (dir_point.n != p.n) throw UsageError("direction dimension differs from point");
        report.command = "deform";
        if (deform_order == 0) {
            const bool tangent = deformation_check(alg.presentation, p, dir_point.matrices);
            report.payload["tangent"] = tangent;
        } else {
            const LiftResult lift =
                lift_deformation(alg.presentation, p, dir_point.matrices, deform_order);
            report.payload["order"] = deform_order;
            report.payload["obstructed"] = lift.obstructed;
            if (lift.obstructed) {
                report.payload["obstructed_order"] = lift.obstructed_order;
                ordered_json obstruction = ordered_json::array();
                for (const auto& e : lift.obstruction) obstruction.push_back(rat_to_string(e));
                report.payload["obstruction"] = std::move(obstruction);
                exit_code = 1;
            } else {
                ordered_json lift_json = ordered_json::array();
                for (const auto& series : lift.lift) {
                    ordered_json coeffs = ordered_json::array();
                    for (const auto& c : series) coeffs.push_back(matrix_json(c));
                    lift_json.push_back(std::move(coeffs));
                }
                report.payload["lift"] = std::move(lift_json);
            }
        }
    } else if (app.got_subcommand(cmd_scan)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const std::string family_text = read_file(family_path);
        digest.feed(family_text);
        const auto entries = parse_family(family_text);
        const auto base_dir = [&family_path]() -> std::string {
            const size_t slash = family_path.find_last_of('/');
            return slash == std::string::npos ? std::string() : family_path.substr(0, slash + 1);
        }();
        std::vector<std::pair<std::string, RepPoint>> family;
        for (const auto& [label, path] : entries) {
            const std::string full = path.front() == '/' ? path : base_dir + path;
            family.emplace_back(label, load_point(full, alg.presentation, digest));
        }
        ResolutionStep res2;
        const bool have_res = !resolution_path.empty();
        if (have_res) res2 = load_resolution(resolution_path, alg.presentation, digest);
        const auto rows = semicontinuity_scan(alg.presentation, family, have_res ? &res2 : nullptr);
        report.command = "scan";
        ordered_json table = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json item;
            item["label"] = row.label;
            item["z0"] = row.z0;
            item["z1"] = row.z1;
            item["ext2"] = ext2_json(row.ext2);
            item["tangent_dim"] = row.tangent_dim;
            table.push_back(std::move(item));
        }
        report.payload["table"] = std::move(table);
    } else if (app.got_subcommand(cmd_cyclic)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        PointedRep pr{p, load_vector(vector_path, digest)};
        const KrylovSpan span = krylov_span(alg.presentation, pr);
        report.command = "cyclic";
        report.payload["dimension"] = span.dimension;
        report.payload["cyclic"] = span.dimension == p.n;
        ordered_json words = ordered_json::array();
        for (const auto& w : span.word_basis)
            words.push_back(word_string(w, alg.presentation.generator_names));
        report.payload["word_basis"] = std::move(words);
    } else if (app.got_subcommand(cmd_canon)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        PointedRep pr{p, load_vector(vector_path, digest)};
        const CanonicalForm form = hilb_canonical_form(alg.presentation, pr);
        report.command = "hilb-canon";
        report.payload["point"] = point_json(form.point);
        ordered_json words = ordered_json::array();
        for (const auto& w : form.word_basis)
            words.push_back(word_string(w, alg.presentation.generator_names));
        report.payload["word_basis"] = std::move(words);
    } else if (app.got_subcommand(cmd_hdim)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint p = load_point(point_path, alg.presentation, digest);
        PointedRep pr{p, load_vector(vector_path, digest)};
        const HilbDimension dim = hilb_dimension_at(alg.presentation, pr);
        report.command = "hilb-dim";
        report.payload["dimension"] = dim.dimension;
        report.payload["caveats"] = dim.caveats;
    } else if (app.got_subcommand(cmd_ab)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        AlgebraFile ab;
        ab.name = alg.name.empty() ? "" : alg.name + "_ab";
        ab.presentation = abelianization(alg.presentation);
        report.command = "abelianize";
        report.payload["presentation"] = print_algebra(ab);
    } else if (app.got_subcommand(cmd_iso)) {
        const AlgebraFile alg = load_algebra(alg_path, digest);
        const RepPoint a = load_point(point_path, alg.presentation, digest);
        const RepPoint b = load_point(point_b_path, alg.presentation, digest);
        const IsoVerdict verdict = module_isomorphic(alg.presentation, a, b, seed, tries);
        report.command = "iso";
        report.seed = seed;
        report.payload["intertwiner_dim"] = verdict.intertwiner_dimension;
        switch (verdict.kind) {
            case IsoKind::Isomorphic:
                report.payload["verdict"] = "isomorphic";
                report.payload["witness"] = matrix_json(*verdict.witness);
                break;
            case IsoKind::NotIsomorphic:
                report.payload["verdict"] = "not-isomorphic";
                break;
            case IsoKind::Inconclusive:
                report.payload["verdict"] = "inconclusive";
                break;
        }
    }

    report.inputs_digest = digest.hex();
    emit(report, as_json);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rep::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rep::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
