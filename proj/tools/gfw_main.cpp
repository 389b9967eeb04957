// gfw: exact-arithmetic workbench for the graded models of vector-field
// cohomology on spheres. Every computation is deterministic; exit code 0
// means success, 1 a failed verification, 2 invalid input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gfw/serialize.hpp"

namespace {

using namespace gfw;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct Output {
    std::string format = "text";
    std::string path;

    int emit(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return kExitOk;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << path << "' for writing\n";
            return kExitBadInput;
        }
        file << payload;
        return kExitOk;
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "write output to a file instead of stdout");
}

std::string betti_text(const BettiTable& table) {
    std::ostringstream os;
    os << "model " << table.model << ", degrees 0.." << table.max_degree << "\n";
    os << "degree  dim\n";
    for (int k = 0; k <= table.max_degree; ++k)
        if (table.dim(k) != 0)
            os << k << "  " << table.dim(k) << "\n";
    return os.str();
}

int emit_betti(const Output& out, const BettiTable& table, int d) {
    if (out.format == "json") {
        Json j;
        j["model"] = table.model;
        j["d"] = d;
        j["max_degree"] = table.max_degree;
        j["betti"] = betti_json(table)["betti"];
        return out.emit(j.dump(2) + "\n");
    }
    if (out.format == "csv")
        return out.emit(betti_csv(table));
    return out.emit(betti_text(table));
}

int run_wu_betti(int d, int max_degree, int jobs, const Output& out) {
    if (d < 1) {
        std::cerr << "error: --d must be at least 1\n";
        return kExitBadInput;
    }
    if (max_degree < 0) {
        std::cerr << "error: --max-degree must be nonnegative\n";
        return kExitBadInput;
    }
    ModelBundle wu = build_WU(d);
    BettiTable table = betti_table(wu.dga, wu.name, max_degree, jobs);
    return emit_betti(out, table, d);
}

int run_gamma_betti(int d, int max_degree, int jobs, const Output& out) {
    if (d != 3) {
        std::cerr << "error: unsupported dimension " << d
                  << " (the section-space model is tabulated for d = 3 only)\n";
        return kExitBadInput;
    }
    if (max_degree < 0 || max_degree > 12) {
        std::cerr << "error: --max-degree must lie in 0..12 "
                  << "(the differential table only supports degrees <= 12)\n";
        return kExitBadInput;
    }
    ModelBundle gamma = build_gamma();
    BettiTable table = betti_table(gamma.dga, gamma.name, max_degree, jobs);
    return emit_betti(out, table, d);
}

int run_kernel(const std::string& model, int d, int max_degree, const Output& out) {
    ModelBundle bundle = [&]() -> ModelBundle {
        if (model == "fdso") {
            if (d < 2)
                throw std::invalid_argument("--d must be at least 2 for fdso");
            return build_FdSOd(d);
        }
        if (model == "gamma") {
            if (d != 3)
                throw std::invalid_argument("the gamma kernel is tabulated for d = 3 only");
            return build_gamma();
        }
        throw std::invalid_argument("unknown kernel model '" + model + "' (use fdso or gamma)");
    }();
    AlgebraPresentation source = build_BSO(model == "fdso" ? d : d + 1);
    std::map<int, Element> values;
    for (const GeneratorSpec& g : source.generators())
        values[g.id] = Element::term(Monomial::gen(bundle.dga.alg.id_of(g.name)));
    Morphism f = make_morphism(source, bundle.dga.alg, std::move(values));
    auto kernel = cohomology_kernel_of_map(f, bundle.dga, max_degree);

    if (out.format == "json") {
        Json per_degree = Json::object();
        for (const auto& [k, basis] : kernel) {
            Json list = Json::array();
            for (const Element& u : basis)
                list.push_back(source.element_string(u));
            per_degree[std::to_string(k)] = std::move(list);
        }
        Json j;
        j["model"] = bundle.name;
        j["d"] = d;
        j["max_degree"] = max_degree;
        j["kernel"] = std::move(per_degree);
        return out.emit(j.dump(2) + "\n");
    }
    std::ostringstream os;
    if (out.format == "csv") {
        os << "degree,element\n";
        for (const auto& [k, basis] : kernel)
            for (const Element& u : basis)
                os << k << ',' << source.element_string(u) << '\n';
    } else {
        os << "kernel of the characteristic-class map into " << bundle.name << " through degree "
           << max_degree << "\n";
        if (kernel.empty())
            os << "(empty: the map is injective in this range)\n";
        for (const auto& [k, basis] : kernel)
            for (const Element& u : basis)
                os << "degree " << k << ": " << source.element_string(u) << "\n";
    }
    return out.emit(os.str());
}

int run_ideal_mingens(int d, const Output& out) {
    if (d < 1 || d > 8) {
        std::cerr << "error: --d must lie in 1..8\n";
        return kExitBadInput;
    }
    WeightedRing ring = chern_ring(d);
    MinGenSet gens = truncation_kernel_min_gens(ring, 2 * d);
    if (out.format == "json") {
        Json j;
        j["model"] = "u" + std::to_string(d);
        j["d"] = d;
        j["mingens"] = min_gens_json(ring, gens);
        return out.emit(j.dump(2) + "\n");
    }
    std::ostringstream os;
    if (out.format == "csv") {
        os << "degree,monomial\n";
        for (const auto& [deg, monos] : gens.by_degree)
            for (const ExpVec& m : monos)
                os << deg << ',' << monomial_text(ring, m) << '\n';
    } else {
        os << "minimal generators of the degree > " << 2 * d << " truncation kernel in "
           << d << " Chern classes\n";
        for (const auto& [deg, monos] : gens.by_degree)
            for (const ExpVec& m : monos)
                os << "degree " << deg << ": " << monomial_text(ring, m) << "\n";
    }
    return out.emit(os.str());
}

struct VerifyRow {
    std::string check;
    std::string property;
    bool pass = false;
};

void run_dsq_suite(std::vector<VerifyRow>& rows) {
    for (int d = 1; d <= 6; ++d) {
        ModelBundle wu = build_WU(d);
        rows.push_back({"dsq-" + wu.name, "differential squares to zero on every generator",
                        verify_d_squared(wu.dga, 4 * d).ok()});
    }
    for (int d = 2; d <= 6; ++d) {
        ModelBundle fd = build_FdSOd(d);
        rows.push_back({"dsq-" + fd.name, "twisted differential squares to zero",
                        verify_d_squared(fd.dga, 4 * d).ok()});
    }
    ModelBundle rel = build_relative_D();
    rows.push_back({"dsq-relative", "p1-corrected differential squares to zero through degree 15",
                    verify_d_squared(rel.dga, 15).ok()});
    ModelBundle gamma = build_gamma();
    rows.push_back({"dsq-gamma", "section-space differential squares to zero through degree 13",
                    verify_d_squared(gamma.dga, 13).ok()});
}

void run_chainmap_suite(std::vector<VerifyRow>& rows) {
    Morphism psi = psi_morphism();
    Derivation d_src = build_relative_D().dga.d;
    Derivation d_tgt = build_FdSOd(3).dga.d;
    rows.push_back({"chainmap-psi",
                    "the map onto the twisted fiber model commutes with the differentials",
                    verify_chain_map(psi, d_src, d_tgt, 15).ok()});
    EvaluationModel ev = ev_morphism();
    rows.push_back({"chainmap-ev",
                    "the evaluation model z -> z + s*zb commutes with the differentials",
                    verify_chain_map(ev.ev, ev.source.d, ev.target.d, 13).ok()});
}

void run_products_suite(std::vector<VerifyRow>& rows) {
    Morphism phi = phi_morphism();
    ModelBundle wu = build_WU(3);
    bool products_ok = true;
    for (int i = 1; i <= 17 && products_ok; ++i) {
        for (int j = i; j <= 17 && products_ok; ++j) {
            Element prod = wu.dga.alg.multiply(
                phi.values.at(phi.source.id_of("x" + std::to_string(i))),
                phi.values.at(phi.source.id_of("x" + std::to_string(j))));
            if (i == 1 && j == 2) {
                if (prod.is_zero() || !is_coboundary(wu.dga, prod))
                    products_ok = false;
                Element primitive = parse_element(wu.dga.alg, "-c2*h1*h2*h3");
                if (!(apply_derivation(wu.dga.alg, wu.dga.d, primitive) == prod))
                    products_ok = false;
            } else if (!prod.is_zero()) {
                products_ok = false;
            }
        }
    }
    rows.push_back({"products-phi",
                    "representative products vanish except the one exact pair", products_ok});
    rows.push_back({"chainmap-phi", "the representative map is a chain map",
                    verify_chain_map(phi, build_CE3().dga.d, wu.dga.d, 15).ok()});
}

void run_c1_suite(std::vector<VerifyRow>& rows) {
    ModelBundle c1 = build_C1();
    BettiTable betti = betti_table(c1.dga, c1.name, 20);
    AlgebraPresentation ring =
        define_algebra({{0, "p1", 4}, {0, "e", 4}, {0, "zb1", 4}});
    auto hilbert =
        hilbert_principal_quotient(ring, parse_element(ring, "p1^2 - e*zb1"), 20);
    bool ok = true;
    for (int k = 0; k <= 20; ++k)
        if (betti.dim(k) != hilbert.at(k))
            ok = false;
    rows.push_back({"c1-hilbert",
                    "pure-model cohomology equals the quotient-ring Hilbert function", ok});
}

void run_mingen_range_suite(std::vector<VerifyRow>& rows) {
    bool ok = true;
    for (int d = 1; d <= 6; ++d)
        if (!min_gen_degree_range_check(d))
            ok = false;
    rows.push_back({"mingen-range",
                    "minimal generator degrees fill [2d+2, 4d] with both endpoints attained", ok});
}

int run_verify(const std::string& suite, const Output& out) {
    std::vector<VerifyRow> rows;
    if (suite == "dsq" || suite == "all")
        run_dsq_suite(rows);
    if (suite == "chainmap" || suite == "all")
        run_chainmap_suite(rows);
    if (suite == "products" || suite == "all")
        run_products_suite(rows);
    if (suite == "c1" || suite == "all")
        run_c1_suite(rows);
    if (suite == "mingen-range" || suite == "all")
        run_mingen_range_suite(rows);
    if (rows.empty()) {
        std::cerr << "error: unknown suite '" << suite
                  << "' (use dsq, chainmap, products, c1, mingen-range, or all)\n";
        return kExitBadInput;
    }
    bool all_ok = true;
    for (const VerifyRow& row : rows)
        all_ok = all_ok && row.pass;

    int rc;
    if (out.format == "json") {
        Json report = Json::array();
        for (const VerifyRow& row : rows)
            report.push_back({{"check", row.check},
                              {"property", row.property},
                              {"status", row.pass ? "pass" : "fail"}});
        Json j;
        j["suite"] = suite;
        j["report"] = std::move(report);
        rc = out.emit(j.dump(2) + "\n");
    } else if (out.format == "csv") {
        std::ostringstream os;
        os << "check,property,status\n";
        for (const VerifyRow& row : rows)
            os << row.check << ",\"" << row.property << "\"," << (row.pass ? "pass" : "fail")
               << '\n';
        rc = out.emit(os.str());
    } else {
        std::ostringstream os;
        for (const VerifyRow& row : rows)
            os << (row.pass ? "[PASS] " : "[FAIL] ") << row.check << ": " << row.property
               << "\n";
        rc = out.emit(os.str());
    }
    if (rc != kExitOk)
        return rc;
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology workbench for graded models of sphere vector fields"};
    app.require_subcommand(1);

    int d = 3;
    int max_degree = 0;
    int jobs = 1;
    Output out;

    auto add_common = [&](CLI::App* cmd, bool with_jobs) {
        cmd->add_option("--d", d, "fiber dimension")->capture_default_str();
        cmd->add_option("--max-degree", max_degree, "largest cohomological degree");
        if (with_jobs)
            cmd->add_option("--jobs", jobs, "degree-slice worker threads")
                ->check(CLI::PositiveNumber);
        add_output_flags(cmd, out);
    };

    CLI::App* wu = app.add_subcommand("wu", "truncated Koszul fiber model");
    CLI::App* wu_betti = wu->add_subcommand("betti", "Betti table of the fiber model");
    add_common(wu_betti, true);

    CLI::App* gamma = app.add_subcommand("gamma", "section-space model for the 3-sphere");
    CLI::App* gamma_betti = gamma->add_subcommand("betti", "smooth-cohomology dimension table");
    add_common(gamma_betti, true);

    CLI::App* kernel = app.add_subcommand("kernel", "kernel of the characteristic-class map");
    std::string kernel_model = "fdso";
    kernel->add_option("--model", kernel_model, "target model (fdso or gamma)")
        ->capture_default_str();
    add_common(kernel, false);

    CLI::App* ideal = app.add_subcommand("ideal", "weighted monomial-ideal computations");
    CLI::App* mingens = ideal->add_subcommand("mingens", "minimal truncation-kernel generators");
    add_common(mingens, false);

    CLI::App* verify = app.add_subcommand("verify", "run the named verification suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "dsq, chainmap, products, c1, mingen-range, or all")
        ->capture_default_str();
    add_output_flags(verify, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)  // --help
            return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (wu_betti->parsed())
            return run_wu_betti(d, max_degree, jobs, out);
        if (gamma_betti->parsed())
            return run_gamma_betti(d, max_degree, jobs, out);
        if (kernel->parsed())
            return run_kernel(kernel_model, d, max_degree, out);
        if (mingens->parsed())
            return run_ideal_mingens(d, out);
        if (verify->parsed())
            return run_verify(suite, out);
        std::cerr << "error: missing subcommand\n";
        return kExitBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
