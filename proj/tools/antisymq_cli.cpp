// Command-line surface: generate circuits and QASM, simulate and verify
// antisymmetrization runs against the classical oracle, and print resource
// tables for schedule scaling.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "antisymq/antisym.hpp"
#include "antisymq/dicke.hpp"
#include "antisymq/passes.hpp"

using namespace antisymq;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

ScheduleVariant parse_variant(const std::string& v) {
    if (v == "reference") return ScheduleVariant::Reference;
    if (v == "shared") return ScheduleVariant::Shared;
    if (v == "parallel") return ScheduleVariant::Parallel;
    throw std::invalid_argument("unknown variant: " + v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

void print_report(const ResourceReport& r) {
    std::printf("gate counts:");
    for (const auto& [kind, count] : r.gate_count_by_kind)
        std::printf("  %s=%d", kind.c_str(), count);
    std::printf("\nswap_count=%d  depth=%d  cnot_equivalent=%lld\n", r.swap_count, r.depth,
                r.cnot_equivalent);
    if (!r.multicontrol_histogram.empty()) {
        std::printf("multicontrol histogram (controls: count):");
        for (const auto& [k, v] : r.multicontrol_histogram) std::printf("  %d:%d", k, v);
        std::printf("\n");
    }
}

struct ConfigFlags {
    int nt = 2, np = 2, n = 2;
    AntisymConfig to_config(int extra = 0) const {
        return AntisymConfig{nt, np, n, extra};
    }
};

int cmd_generate(const ConfigFlags& cf, const std::string& variant_name, bool collapse,
                 bool gate_dicke, int parallel_ancillae, const std::string& qasm_path,
                 const std::string& json_path, bool describe) {
    ScheduleVariant variant = parse_variant(variant_name);
    int extra = (variant == ScheduleVariant::Parallel)
                    ? (parallel_ancillae > 0 ? parallel_ancillae : cf.np)
                    : 0;
    AntisymConfig cfg = cf.to_config(extra);
    cfg.validate();
    BuildOptions options;
    options.use_gate_dicke = gate_dicke;
    options.collapse = collapse;
    options.parallel_ancillae = (variant == ScheduleVariant::Parallel) ? extra : 0;
    Circuit circuit = build_full_circuit(cfg, variant, options);

    SwapSchedule schedule = (variant == ScheduleVariant::Reference)
                                ? generate_reference_schedule(cfg)
                                : generate_shared_schedule(cfg);
    std::printf("config: N_T=%d N_p=%d n=%d variant=%s\n", cfg.n_target, cfg.n_projectile,
                cfg.qubits_per_particle, variant_name.c_str());
    std::printf("schedule: %zu swap ops over %d distinct slot pairs\n", schedule.ops.size(),
                schedule.distinct_pair_count());
    print_report(metrics(circuit));

    if (!qasm_path.empty()) write_file(qasm_path, emit_qasm(circuit));
    if (!json_path.empty()) write_file(json_path, circuit_to_json(circuit));
    if (describe) {
        std::printf("%s\n", layout_to_json(build_layout(cfg)).c_str());
        std::printf("%s\n", schedule_to_json(schedule).c_str());
    }
    return 0;
}

nlohmann::json run_report_json(const AntisymConfig& cfg, const std::string& variant,
                               const RunResult& result, const ResourceReport& report,
                               double wall_seconds) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [k, v] : report.multicontrol_histogram) hist[std::to_string(k)] = v;
    return nlohmann::json{
        {"config",
         {{"n_target", cfg.n_target},
          {"n_projectile", cfg.n_projectile},
          {"qubits_per_particle", cfg.qubits_per_particle}}},
        {"variant", variant},
        {"fidelity_vs_oracle", result.diagnostics.fidelity_vs_oracle},
        {"antisymmetry_residual", result.diagnostics.antisymmetry_residual},
        {"ancilla_ground_weight", result.diagnostics.ancilla_ground_weight},
        {"norm", result.diagnostics.norm},
        {"total_qubits", result.diagnostics.total_qubits},
        {"resources",
         {{"swap_count", report.swap_count},
          {"depth", report.depth},
          {"cnot_equivalent", report.cnot_equivalent},
          {"multicontrol_histogram", hist}}},
        {"wall_seconds", wall_seconds}};
}

int cmd_simulate(const ConfigFlags& cf, const std::string& variant_name,
                 const std::string& target_path, const std::string& projectile_path,
                 std::uint64_t seed, bool collapse, bool gate_dicke, int parallel_ancillae,
                 const std::string& report_path) {
    ScheduleVariant variant = parse_variant(variant_name);
    int extra = (variant == ScheduleVariant::Parallel)
                    ? (parallel_ancillae > 0 ? parallel_ancillae : cf.np)
                    : 0;
    AntisymConfig cfg = cf.to_config(extra);
    cfg.validate();

    SubsystemState target, projectile;
    if (!target_path.empty() && !projectile_path.empty()) {
        target = subsystem_from_json(read_file(target_path), cfg, 0);
        projectile = subsystem_from_json(read_file(projectile_path), cfg, 1);
    } else if (target_path.empty() && projectile_path.empty()) {
        std::mt19937_64 rng(seed);
        target = random_subsystem(rng, cfg.n_target, 0, cfg);
        projectile = random_subsystem(rng, cfg.n_projectile, 1, cfg);
    } else {
        throw std::invalid_argument("provide both --target and --projectile, or neither");
    }

    BuildOptions options;
    options.use_gate_dicke = gate_dicke;
    options.collapse = collapse;
    options.parallel_ancillae = (variant == ScheduleVariant::Parallel) ? extra : 0;

    auto t0 = std::chrono::steady_clock::now();
    RunResult result = run_antisymmetrization(target, projectile, cfg, variant, options);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ResourceReport report = metrics(build_full_circuit(cfg, variant, options));
    nlohmann::json j = run_report_json(cfg, variant_name, result, report, wall);
    std::printf("%s\n", j.dump(2).c_str());
    if (!report_path.empty()) write_file(report_path, j.dump(2));
    return result.diagnostics.passed() ? 0 : kExitVerifyFailure;
}

struct VerifyOutcome {
    nlohmann::json checks = nlohmann::json::array();
    bool all_ok = true;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
        if (!ok) {
            all_ok = false;
            std::printf("FAIL %s %s\n", name.c_str(), detail.c_str());
        }
    }
};

int cmd_verify(int max_nt, int max_np, int max_n, int trials, bool heavy, bool corrupt,
               const std::string& report_path) {
    VerifyOutcome out;

    if (corrupt) {
        // Deliberate mutation hook: flip one predicate bit and show that branch
        // validation catches it.
        AntisymConfig cfg{2, 2, 2, 0};
        SwapSchedule s = generate_shared_schedule(cfg);
        s.ops[0].predicate[0].value ^= 1;
        auto reports = validate_schedule(s);
        for (const BranchReport& r : reports) {
            if (!r.ok()) {
                std::printf("corrupted schedule fails on pattern 0x%llx\n",
                            static_cast<unsigned long long>(r.pattern));
                std::printf("%s\n", branch_reports_to_json({r}).c_str());
                return kExitVerifyFailure;
            }
        }
        std::printf("corruption was not detected\n");
        return kExitVerifyFailure;
    }

    for (int nt = 1; nt <= std::max(max_nt, 12); ++nt)
        for (int np = 1; np <= nt; ++np)
            out.add("counting/" + std::to_string(nt) + "," + std::to_string(np),
                    n_perm_binomial(nt, np) == n_perm_sum(nt, np));

    for (int nt = 1; nt <= max_nt; ++nt) {
        for (int np = 1; np <= std::min(nt, max_np); ++np) {
            AntisymConfig cfg{nt, np, 2, 0};
            if ((1 << (cfg.qubits_per_particle - 1)) < nt) cfg.qubits_per_particle = 4;
            std::string key = std::to_string(nt) + "," + std::to_string(np);
            out.add("branch-validity/reference/" + key,
                    schedule_valid(generate_reference_schedule(cfg)));
            out.add("branch-validity/shared/" + key,
                    schedule_valid(generate_shared_schedule(cfg)));
        }
    }

    for (int nt = 1; nt <= 3; ++nt) {
        for (int np = 1; np <= std::min({nt, max_np, 3}); ++np) {
            if (nt + np > 5) continue;
            int n = std::min(max_n, 3);
            if ((1 << (n - 1)) < nt) continue;
            AntisymConfig cfg{nt, np, n, 0};
            std::mt19937_64 rng(12345);
            SlaterSpec t{random_subsystem(rng, nt, 0, cfg).terms[0].second};
            SlaterSpec p{random_subsystem(rng, np, 1, cfg).terms[0].second};
            SubsystemState ts{{{Complex{1, 0}, t}}, nt, 0};
            SubsystemState ps{{{Complex{1, 0}, p}}, np, 1};
            double f = fidelity(oracle_antisymmetrize(ts, ps, cfg),
                                oracle_full_permutation_check(t, p, cfg));
            out.add("double-oracle/" + std::to_string(nt) + "," + std::to_string(np),
                    f >= 1.0 - 1e-12, "fidelity=" + std::to_string(f));
        }
    }

    for (int nt = 1; nt <= max_nt; ++nt) {
        for (int np = 1; np <= std::min(nt, max_np); ++np) {
            for (int n = 2; n <= max_n; ++n) {
                AntisymConfig cfg{nt, np, n, 0};
                if ((1 << (n - 1)) < std::max(nt, np)) continue;
                int total = (nt + np) * (n + 1);
                if (total > (heavy ? 24 : 22)) continue;
                for (int trial = 0; trial < trials; ++trial) {
                    std::mt19937_64 rng(1000 + trial);
                    SubsystemState t = random_subsystem(rng, nt, 0, cfg);
                    SubsystemState p = random_subsystem(rng, np, 1, cfg);
                    RunResult r = run_antisymmetrization(t, p, cfg, ScheduleVariant::Shared, {});
                    std::string key = std::to_string(nt) + "," + std::to_string(np) + ",n" +
                                      std::to_string(n) + ",t" + std::to_string(trial);
                    out.add("end-to-end/" + key, r.diagnostics.passed(),
                            "fidelity=" + std::to_string(r.diagnostics.fidelity_vs_oracle));
                }
            }
        }
    }

    if (heavy) {
        AntisymConfig cfg{3, 3, 3, 0};
        std::mt19937_64 rng(2024);
        SubsystemState t = random_subsystem(rng, 3, 0, cfg);
        SubsystemState p = random_subsystem(rng, 3, 1, cfg);
        RunResult r = run_antisymmetrization(t, p, cfg, ScheduleVariant::Shared, {});
        out.add("end-to-end/heavy-3,3,n3", r.diagnostics.passed(),
                "fidelity=" + std::to_string(r.diagnostics.fidelity_vs_oracle));
    }

    std::printf("%s\n", out.all_ok ? "all checks passed" : "verification FAILED");
    if (!report_path.empty()) write_file(report_path, out.checks.dump(2));
    return out.all_ok ? 0 : kExitVerifyFailure;
}

int cmd_estimate(int max_nt, int max_np, int n_flag) {
    std::printf("%4s %4s %10s %6s %6s %8s %10s %9s %9s\n", "N_T", "N_p", "N_perm", "swaps",
                "pairs", "ancilla", "cnot_eq", "depth_seq", "depth_par");
    for (int nt = 1; nt <= max_nt; ++nt) {
        for (int np = 1; np <= std::min(nt, max_np); ++np) {
            int n = n_flag;
            if (n == 0) {
                n = 2;
                while ((1 << (n - 1)) < nt) ++n;
            }
            AntisymConfig cfg{nt, np, n, 0};
            cfg.validate();
            Layout layout = build_layout(cfg);
            SwapSchedule schedule = generate_shared_schedule(cfg);
            Circuit stage;
            stage.num_qubits = layout.total_qubits;
            for (const SwapOp& op : schedule.ops) {
                std::vector<Control> controls;
                for (const PredicateLiteral& lit : op.predicate)
                    controls.push_back({layout.dicke_ancilla(lit.ancilla),
                                        lit.value ? Polarity::Closed : Polarity::Open});
                std::vector<int> a, b;
                for (int q : layout.slot_block(op.slot_a)) a.push_back(q);
                for (int q : layout.slot_block(op.slot_b)) b.push_back(q);
                stage.append(make_block_swap(controls, a, b));
            }
            Circuit par = parallelize(stage, np);
            ResourceReport rep = metrics(stage);
            std::printf("%4d %4d %10lld %6zu %6d %8d %10lld %9d %9d\n", nt, np,
                        n_perm_binomial(nt, np), schedule.ops.size(),
                        schedule.distinct_pair_count(), nt + np, rep.cnot_equivalent,
                        swap_region_depth(stage), swap_region_depth(par));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"antisymmetrization circuit toolkit"};
    app.require_subcommand(1);

    ConfigFlags cf;
    std::string variant = "shared";
    bool collapse = false, gate_dicke = false, describe = false;
    int parallel_ancillae = 0;
    std::string qasm_path, json_path, target_path, projectile_path, report_path;
    std::uint64_t seed = 1;
    int max_nt = 3, max_np = 2, max_n = 3, trials = 2, est_nt = 12, est_np = 4, est_n = 0;
    bool heavy = false, corrupt = false;

    auto* gen = app.add_subcommand("generate", "emit a circuit and its resource report");
    gen->add_option("--nt", cf.nt, "target particle count");
    gen->add_option("--np", cf.np, "projectile particle count");
    gen->add_option("--n", cf.n, "qubits per particle (incl. side qubit)");
    gen->add_option("--variant", variant, "reference|shared|parallel");
    gen->add_flag("--collapse", collapse, "peephole-collapse the swap stage");
    gen->add_flag("--gate-dicke", gate_dicke, "include the gate-based Dicke preparation");
    gen->add_option("--parallel-ancillae", parallel_ancillae, "work ancillae for parallel variant");
    gen->add_option("--qasm", qasm_path, "write OpenQASM 3.0 here");
    gen->add_option("--json", json_path, "write circuit JSON here");
    gen->add_flag("--describe", describe, "print layout and schedule JSON");

    auto* sim = app.add_subcommand("simulate", "run a full antisymmetrization and compare to the oracle");
    sim->add_option("--nt", cf.nt);
    sim->add_option("--np", cf.np);
    sim->add_option("--n", cf.n);
    sim->add_option("--variant", variant);
    sim->add_option("--target", target_path, "target subsystem JSON");
    sim->add_option("--projectile", projectile_path, "projectile subsystem JSON");
    sim->add_option("--seed", seed, "seed for random inputs when states are omitted");
    sim->add_flag("--collapse", collapse);
    sim->add_flag("--gate-dicke", gate_dicke);
    sim->add_option("--parallel-ancillae", parallel_ancillae);
    sim->add_option("--report", report_path, "write the run report JSON here");

    auto* ver = app.add_subcommand("verify", "run the property suite");
    ver->add_option("--max-nt", max_nt);
    ver->add_option("--max-np", max_np);
    ver->add_option("--max-n", max_n);
    ver->add_option("--trials", trials);
    ver->add_flag("--heavy", heavy, "include the 24-qubit (3,3) n=3 run");
    ver->add_flag("--corrupt", corrupt, "inject a schedule corruption (expects failure)");
    ver->add_option("--report", report_path);

    auto* est = app.add_subcommand("estimate", "print the schedule resource table");
    est->add_option("--max-nt", est_nt);
    est->add_option("--max-np", est_np);
    est->add_option("--n", est_n, "qubits per particle; 0 = smallest admissible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return (e.get_exit_code() == 0) ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(cf, variant, collapse, gate_dicke, parallel_ancillae, qasm_path,
                                json_path, describe);
        if (sim->parsed())
            return cmd_simulate(cf, variant, target_path, projectile_path, seed, collapse,
                                gate_dicke, parallel_ancillae, report_path);
        if (ver->parsed())
            return cmd_verify(max_nt, max_np, max_n, trials, heavy, corrupt, report_path);
        if (est->parsed()) return cmd_estimate(est_nt, est_np, est_n);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
