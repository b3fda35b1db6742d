#include "sl2comod/scenarios.hpp"
#include "sl2comod/weights.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using sl2comod::Json;

bool g_pretty = false;

void emit(const Json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

int emit_report(const sl2comod::ScenarioReport& report) {
    if (g_pretty)
        std::cout << render_pretty(report);
    else
        emit(report_to_json(report));
    return report.pass ? 0 : 1;
}

int run_named_scenario(const std::string& name, const Json& params) {
    return emit_report(sl2comod::run_scenario(name, params));
}

void write_comodule(const sl2comod::Comodule& c, const std::string& out_path) {
    if (out_path.empty())
        emit(comodule_to_json(c));
    else
        store_comodule(c, out_path);
}

sl2comod::Comodule maybe_base_change(const sl2comod::Comodule& c, const std::string& ring_flag_value) {
    if (ring_flag_value.empty()) return c;
    return base_change(c, sl2comod::parse_ring_flag(ring_flag_value));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for comodules over the coordinate Hopf algebra of SL2 over Z, Q, Z_(p) and Z[1/m]"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "render reports for humans instead of compact JSON");

    int exit_code = 0;

    // --- hopf verify ------------------------------------------------------
    auto* hopf = app.add_subcommand("hopf", "Hopf-algebra level operations");
    hopf->require_subcommand(1);
    auto* hopf_verify = hopf->add_subcommand("verify", "check the full Hopf axiom suite");
    auto hv_variant = std::make_shared<std::string>("both");
    auto hv_seed = std::make_shared<std::int64_t>(0);
    auto hv_samples = std::make_shared<std::int64_t>(100);
    hopf_verify->add_option("--variant", *hv_variant, "which comultiplication to check")
        ->check(CLI::IsMember({"std", "op", "both"}));
    auto* hv_seed_opt = hopf_verify->add_option("--seed", *hv_seed, "seed for the random product suite");
    hopf_verify->add_option("--samples", *hv_samples, "number of random products");
    hopf_verify->callback([&, hv_variant, hv_seed, hv_samples, hv_seed_opt] {
        Json params{{"variant", *hv_variant}, {"samples", *hv_samples}};
        if (hv_seed_opt->count() > 0) params["seed"] = *hv_seed;
        exit_code = run_named_scenario("hopf-axioms", params);
    });

    // --- comodule verify / build -----------------------------------------
    auto* comodule = app.add_subcommand("comodule", "construct and check comodules");
    comodule->require_subcommand(1);

    auto* cm_verify = comodule->add_subcommand("verify", "check the comodule axioms of a JSON file");
    auto cm_verify_file = std::make_shared<std::string>();
    cm_verify->add_option("file", *cm_verify_file, "comodule JSON file")->required();
    cm_verify->callback([&, cm_verify_file] {
        sl2comod::Comodule c = sl2comod::load_comodule(*cm_verify_file, /*verify=*/false);
        sl2comod::ComoduleCheckReport rep = verify_comodule(c);
        emit(Json{{"file", *cm_verify_file}, {"ok", rep.ok}, {"failures", rep.failures}});
        exit_code = rep.ok ? 0 : 1;
    });

    auto* build = comodule->add_subcommand("build", "construct a comodule and print or store it");
    build->require_subcommand(1);
    auto build_ring = std::make_shared<std::string>();
    auto build_out = std::make_shared<std::string>();
    build->add_option("--ring", *build_ring, "base ring flag: Z, Q, Z_p:<prime>, Z_inv:<m>");
    build->add_option("--out", *build_out, "write the comodule to this file instead of stdout");

    auto* build_sym = build->add_subcommand("sym", "symmetric power of the standard comodule");
    auto sym_n = std::make_shared<std::int64_t>(0);
    build_sym->add_option("n", *sym_n, "degree")->required()->check(CLI::NonNegativeNumber);
    build_sym->callback([&, sym_n, build_ring, build_out] {
        const sl2comod::BaseRing ring =
            build_ring->empty() ? sl2comod::BaseRing::integers() : sl2comod::parse_ring_flag(*build_ring);
        write_comodule(sl2comod::sym_power(ring, static_cast<int>(*sym_n)), *build_out);
    });

    auto* build_symt = build->add_subcommand("symt", "symmetric tensors inside a tensor power of the standard comodule");
    auto symt_d = std::make_shared<std::int64_t>(2);
    build_symt->add_option("d", *symt_d, "tensor degree")->required()->check(CLI::PositiveNumber);
    build_symt->callback([&, symt_d, build_ring, build_out] {
        const sl2comod::BaseRing ring =
            build_ring->empty() ? sl2comod::BaseRing::integers() : sl2comod::parse_ring_flag(*build_ring);
        write_comodule(symmetric_tensors(standard_comodule(ring), static_cast<int>(*symt_d)), *build_out);
    });

    auto* build_dual =
        build->add_subcommand("dual", "contragredient dual, brought back to the same side and variant");
    auto dual_file = std::make_shared<std::string>();
    build_dual->add_option("file", *dual_file, "comodule JSON file")->required();
    build_dual->callback([&, dual_file, build_ring, build_out] {
        write_comodule(maybe_base_change(contragredient(sl2comod::load_comodule(*dual_file)), *build_ring), *build_out);
    });

    auto* build_transpose = build->add_subcommand("transpose", "entrywise transposed-inverse twist (same side and variant)");
    auto transpose_file = std::make_shared<std::string>();
    build_transpose->add_option("file", *transpose_file, "comodule JSON file")->required();
    build_transpose->callback([&, transpose_file, build_ring, build_out] {
        write_comodule(maybe_base_change(transpose_inverse_twist(sl2comod::load_comodule(*transpose_file)), *build_ring),
                       *build_out);
    });

    auto* build_tensor = build->add_subcommand("tensor", "tensor product of two comodule files");
    auto tensor_a = std::make_shared<std::string>();
    auto tensor_b = std::make_shared<std::string>();
    build_tensor->add_option("file1", *tensor_a, "left factor")->required();
    build_tensor->add_option("file2", *tensor_b, "right factor")->required();
    build_tensor->callback([&, tensor_a, tensor_b, build_ring, build_out] {
        write_comodule(maybe_base_change(tensor_product(sl2comod::load_comodule(*tensor_a),
                                                        sl2comod::load_comodule(*tensor_b)),
                                         *build_ring),
                       *build_out);
    });

    auto* build_bc = build->add_subcommand("base-change", "reinterpret a comodule over a larger ring");
    auto bc_file = std::make_shared<std::string>();
    build_bc->add_option("file", *bc_file, "comodule JSON file")->required();
    build_bc->callback([&, bc_file, build_ring, build_out] {
        if (build_ring->empty()) throw CLI::ValidationError("base-change requires --ring");
        write_comodule(maybe_base_change(sl2comod::load_comodule(*bc_file), *build_ring), *build_out);
    });

    // --- cg-filtration ----------------------------------------------------
    auto* cgf = app.add_subcommand("cg-filtration", "verify the universal filtration of sym^n (x) sym^m");
    auto cgf_n = std::make_shared<std::int64_t>(0);
    auto cgf_m = std::make_shared<std::int64_t>(0);
    auto cgf_ring = std::make_shared<std::string>("Z");
    cgf->add_option("n", *cgf_n, "left degree")->required()->check(CLI::PositiveNumber);
    cgf->add_option("m", *cgf_m, "right degree")->required()->check(CLI::PositiveNumber);
    cgf->add_option("--ring", *cgf_ring, "base ring flag");
    cgf->callback([&, cgf_n, cgf_m, cgf_ring] {
        exit_code = run_named_scenario("cg-filtration", Json{{"n", *cgf_n}, {"m", *cgf_m}, {"ring", *cgf_ring}});
    });

    // --- virtual-cg ---------------------------------------------------------
    auto* vcg = app.add_subcommand("virtual-cg", "verify the virtual product formula in the representation ring");
    auto vcg_n = std::make_shared<std::int64_t>(0);
    auto vcg_m = std::make_shared<std::int64_t>(0);
    vcg->add_option("n", *vcg_n, "left degree")->required()->check(CLI::PositiveNumber);
    vcg->add_option("m", *vcg_m, "right degree")->required()->check(CLI::PositiveNumber);
    vcg->callback([&, vcg_n, vcg_m] {
        exit_code = run_named_scenario("virtual-cg", Json{{"n", *vcg_n}, {"m", *vcg_m}});
    });

    // --- section ---------------------------------------------------------
    auto* section = app.add_subcommand("section", "search a comodule section of V (x) sym^n -> sym^(n+1)");
    auto section_n = std::make_shared<std::int64_t>(0);
    auto section_ring = std::make_shared<std::string>("Z");
    section->add_option("n", *section_n, "degree of the right factor")->required()->check(CLI::PositiveNumber);
    section->add_option("--ring", *section_ring, "base ring flag");
    section->callback([&, section_n, section_ring] {
        const sl2comod::BaseRing ring = sl2comod::parse_ring_flag(*section_ring);
        const int n = static_cast<int>(*section_n);
        sl2comod::Comodule total = tensor_product(sym_power(ring, 1), sym_power(ring, n));
        sl2comod::Comodule quot = sym_power(ring, n + 1);
        sl2comod::SectionOutcome s = find_section(total, quot, sl2comod::multiplication_onto_sym(1, n));
        const bool predicted = ring.is_unit(sl2comod::Rational(n + 1));
        Json j{{"n", n},
               {"ring", ring.name()},
               {"section_found", s.found()},
               {"predicted", predicted},
               {"outcome", section_to_json(s)}};
        emit(j);
        exit_code = (s.found() == predicted) ? 0 : 1;
    });

    // --- weights -----------------------------------------------------------
    auto* weights = app.add_subcommand("weights", "weight table of a comodule file");
    auto weights_file = std::make_shared<std::string>();
    weights->add_option("file", *weights_file, "comodule JSON file")->required();
    weights->callback([&, weights_file] {
        sl2comod::Comodule c = sl2comod::load_comodule(*weights_file);
        sl2comod::WeightDecomposition dec = weight_decomposition(c);
        Json j{{"file", *weights_file}, {"spans", dec.spans}, {"integral", dec.integral}};
        if (dec.spans && dec.integral) {
            Json table = Json::object();
            for (const auto& [w, l] : dec.eigenlattices) table[std::to_string(w)] = l.rank();
            j["weights"] = std::move(table);
        } else {
            j["error"] = "no weight decomposition: the torus action does not split integrally";
        }
        emit(j);
        exit_code = (dec.spans && dec.integral) ? 0 : 1;
    });

    // --- iso ---------------------------------------------------------------
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two comodule files over a ring");
    auto iso_a = std::make_shared<std::string>();
    auto iso_b = std::make_shared<std::string>();
    auto iso_ring = std::make_shared<std::string>("Z");
    auto iso_bound = std::make_shared<std::int64_t>(3);
    iso->add_option("file1", *iso_a, "first comodule")->required();
    iso->add_option("file2", *iso_b, "second comodule")->required();
    iso->add_option("--ring", *iso_ring, "base ring flag");
    iso->add_option("--bound", *iso_bound, "coefficient search bound for morphism spaces of dimension >= 2");
    iso->callback([&, iso_a, iso_b, iso_ring, iso_bound] {
        const sl2comod::BaseRing ring = sl2comod::parse_ring_flag(*iso_ring);
        sl2comod::Comodule a = base_change(sl2comod::load_comodule(*iso_a), ring);
        sl2comod::Comodule b = base_change(sl2comod::load_comodule(*iso_b), ring);
        sl2comod::IsoResult result = find_isomorphism(a, b, static_cast<int>(*iso_bound));
        Json j = iso_to_json(result);
        j["ring"] = ring.name();
        emit(j);
        exit_code = 0;
    });

    // --- scenario ----------------------------------------------------------
    auto* scenario = app.add_subcommand("scenario", "run one named scenario");
    auto scenario_name = std::make_shared<std::string>();
    auto scenario_params = std::make_shared<std::string>();
    scenario->add_option("name", *scenario_name, "scenario name")->required();
    scenario->add_option("--params", *scenario_params, "parameter overrides as a JSON object");
    scenario->callback([&, scenario_name, scenario_params] {
        Json params = Json::object();
        if (!scenario_params->empty()) {
            params = Json::parse(*scenario_params, nullptr, /*allow_exceptions=*/false);
            if (params.is_discarded() || !params.is_object())
                throw std::invalid_argument("--params must be a JSON object");
        }
        exit_code = run_named_scenario(*scenario_name, params);
    });

    // --- reproduce -----------------------------------------------------------
    auto* reproduce = app.add_subcommand("reproduce", "re-run the full scenario suite at default parameters");
    auto reproduce_all = std::make_shared<bool>(false);
    auto reproduce_seed = std::make_shared<std::int64_t>(0);
    reproduce->add_flag("--all", *reproduce_all, "run every scenario");
    auto* reproduce_seed_opt = reproduce->add_option("--seed", *reproduce_seed, "seed for randomized suites");
    reproduce->callback([&, reproduce_all, reproduce_seed, reproduce_seed_opt] {
        if (!*reproduce_all) throw CLI::ValidationError("reproduce requires --all");
        bool all_pass = true;
        Json reports = Json::array();
        for (const std::string& name : sl2comod::scenario_names()) {
            Json params = Json::object();
            if (name == "hopf-axioms" && reproduce_seed_opt->count() > 0) params["seed"] = *reproduce_seed;
            sl2comod::ScenarioReport report = sl2comod::run_scenario(name, params);
            all_pass = all_pass && report.pass;
            if (g_pretty)
                std::cout << render_pretty(report);
            else
                reports.push_back(report_to_json(report));
        }
        if (!g_pretty) emit(reports);
        if (g_pretty) std::cout << (all_pass ? "all scenarios pass\n" : "SOME SCENARIOS FAILED\n");
        exit_code = all_pass ? 0 : 1;
    });

    // Let options declared on a parent (--pretty, --ring, --out) be written
    // after a nested subcommand as well as before it.
    std::function<void(CLI::App*)> enable_fallthrough = [&enable_fallthrough](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands(nullptr)) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return exit_code;
}
