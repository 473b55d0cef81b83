#include "antisymq/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

namespace antisymq {

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::Ry: return "Ry";
        case GateKind::MCX: return "MCX";
        case GateKind::BlockSwap: return "BlockSwap";
    }
    return "?";
}

std::vector<int> Gate::qubits() const {
    std::vector<int> q;
    q.reserve(controls.size() + targets.size());
    for (const Control& c : controls) q.push_back(c.qubit);
    for (int t : targets) q.push_back(t);
    return q;
}

void Gate::validate(int num_qubits) const {
    std::set<int> seen;
    for (int q : qubits()) {
        if (q < 0 || q >= num_qubits)
            throw std::invalid_argument("gate qubit " + std::to_string(q) + " out of range");
        if (!seen.insert(q).second)
            throw std::invalid_argument("gate has duplicate qubit " + std::to_string(q));
    }
    if (kind == GateKind::BlockSwap) {
        if (width < 1 || targets.size() != static_cast<size_t>(2 * width))
            throw std::invalid_argument("BlockSwap target list must hold two width-sized blocks");
    } else {
        if (targets.size() != 1)
            throw std::invalid_argument(gate_kind_name(kind) + " takes exactly one target");
    }
    if ((kind == GateKind::Z || kind == GateKind::H) && !controls.empty())
        throw std::invalid_argument(gate_kind_name(kind) + " takes no controls here");
}

Gate make_x(int q, std::string label) { return Gate{GateKind::X, {}, {q}, 0, 0.0, std::move(label)}; }
Gate make_z(int q, std::string label) { return Gate{GateKind::Z, {}, {q}, 0, 0.0, std::move(label)}; }
Gate make_h(int q, std::string label) { return Gate{GateKind::H, {}, {q}, 0, 0.0, std::move(label)}; }

Gate make_ry(int q, double angle, std::vector<Control> controls, std::string label) {
    return Gate{GateKind::Ry, std::move(controls), {q}, 0, angle, std::move(label)};
}

Gate make_mcx(std::vector<Control> controls, int target, std::string label) {
    return Gate{GateKind::MCX, std::move(controls), {target}, 0, 0.0, std::move(label)};
}

Gate make_block_swap(std::vector<Control> controls, std::vector<int> block_a,
                     std::vector<int> block_b, std::string label) {
    if (block_a.size() != block_b.size())
        throw std::invalid_argument("make_block_swap: block length mismatch");
    Gate g;
    g.kind = GateKind::BlockSwap;
    g.controls = std::move(controls);
    g.width = static_cast<int>(block_a.size());
    g.targets = std::move(block_a);
    g.targets.insert(g.targets.end(), block_b.begin(), block_b.end());
    g.label = std::move(label);
    return g;
}

void Circuit::append(Gate g) {
    g.validate(num_qubits);
    gates.push_back(std::move(g));
}

void Circuit::validate() const {
    if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
    if (!qubit_names.empty() && qubit_names.size() != static_cast<size_t>(num_qubits))
        throw std::invalid_argument("qubit_names size mismatch");
    for (const Gate& g : gates) g.validate(num_qubits);
}

namespace {

int greedy_depth(const std::vector<const Gate*>& gates, int num_qubits) {
    std::vector<int> busy_until(num_qubits, 0);  // first free layer per qubit
    int depth = 0;
    for (const Gate* g : gates) {
        int layer = 0;
        for (int q : g->qubits()) layer = std::max(layer, busy_until[q]);
        for (int q : g->qubits()) busy_until[q] = layer + 1;
        depth = std::max(depth, layer + 1);
    }
    return depth;
}

}  // namespace

ResourceReport metrics(const Circuit& c) {
    c.validate();
    ResourceReport r;
    r.ancilla_count = 0;
    for (const Gate& g : c.gates) {
        r.gate_count_by_kind[gate_kind_name(g.kind)]++;
        if (g.kind == GateKind::BlockSwap) {
            r.swap_count++;
            if (g.controls.empty()) {
                r.cnot_equivalent += 3LL * g.width;
            } else {
                r.cnot_equivalent += 2LL * g.width;
                // One multi-controlled NOT per qubit rank of the block swap.
                int k = static_cast<int>(g.controls.size()) + 1;  // + one swap-side control
                if (k >= 2) r.multicontrol_histogram[k] += g.width;
            }
        } else if (g.kind == GateKind::MCX || g.kind == GateKind::X) {
            int k = static_cast<int>(g.controls.size());
            if (k >= 2)
                r.multicontrol_histogram[k]++;
            else
                r.cnot_equivalent += (k == 1) ? 1 : 0;
        }
    }
    std::vector<const Gate*> ptrs;
    ptrs.reserve(c.gates.size());
    for (const Gate& g : c.gates) ptrs.push_back(&g);
    r.depth = greedy_depth(ptrs, c.num_qubits);
    return r;
}

int swap_region_depth(const Circuit& c) {
    std::vector<const Gate*> swaps;
    for (const Gate& g : c.gates)
        if (g.kind == GateKind::BlockSwap) swaps.push_back(&g);
    return greedy_depth(swaps, c.num_qubits);
}

namespace {

void emit_controls(std::ostringstream& out, const std::vector<Control>& controls) {
    for (const Control& c : controls)
        out << (c.polarity == Polarity::Closed ? "ctrl @ " : "negctrl @ ");
}

void emit_operands(std::ostringstream& out, const std::vector<Control>& controls,
                   const std::vector<int>& targets) {
    bool first = true;
    for (const Control& c : controls) {
        out << (first ? "" : ", ") << "q[" << c.qubit << "]";
        first = false;
    }
    for (int t : targets) {
        out << (first ? "" : ", ") << "q[" << t << "]";
        first = false;
    }
    out << ";\n";
}

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

}  // namespace

std::string emit_qasm(const Circuit& c) {
    c.validate();
    std::ostringstream out;
    out << "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
    if (!c.qubit_names.empty())
        for (int q = 0; q < c.num_qubits; ++q)
            out << "// q[" << q << "] = " << c.qubit_names[q] << "\n";
    out << "qubit[" << c.num_qubits << "] q;\n";
    for (const Gate& g : c.gates) {
        if (!g.label.empty()) out << "// " << g.label << "\n";
        switch (g.kind) {
            case GateKind::X:
            case GateKind::MCX:
                emit_controls(out, g.controls);
                out << "x ";
                emit_operands(out, g.controls, g.targets);
                break;
            case GateKind::Z:
                out << "z ";
                emit_operands(out, {}, g.targets);
                break;
            case GateKind::H:
                out << "h ";
                emit_operands(out, {}, g.targets);
                break;
            case GateKind::Ry:
                emit_controls(out, g.controls);
                out << "ry(" << format_angle(g.angle) << ") ";
                emit_operands(out, g.controls, g.targets);
                break;
            case GateKind::BlockSwap:
                for (int r = 0; r < g.width; ++r) {
                    emit_controls(out, g.controls);
                    out << "swap ";
                    emit_operands(out, g.controls, {g.targets[r], g.targets[g.width + r]});
                }
                break;
        }
    }
    return out.str();
}

void apply_circuit(const Circuit& c, StateVector& state) {
    if (state.num_qubits() != c.num_qubits)
        throw std::invalid_argument("apply_circuit: qubit count mismatch");
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
                if (g.controls.empty())
                    state.apply_x(g.targets[0]);
                else
                    state.apply_mcx(g.controls, g.targets[0]);
                break;
            case GateKind::Z: state.apply_z(g.targets[0]); break;
            case GateKind::H: state.apply_h(g.targets[0]); break;
            case GateKind::Ry:
                if (g.controls.empty())
                    state.apply_ry(g.targets[0], g.angle);
                else
                    state.apply_cry(g.controls, g.targets[0], g.angle);
                break;
            case GateKind::MCX: state.apply_mcx(g.controls, g.targets[0]); break;
            case GateKind::BlockSwap: {
                std::span<const int> a(g.targets.data(), g.width);
                std::span<const int> b(g.targets.data() + g.width, g.width);
                state.apply_cswap_block(g.controls, a, b);
                break;
            }
        }
    }
}

namespace {

nlohmann::json gate_to_json(const Gate& g) {
    nlohmann::json jc = nlohmann::json::array();
    for (const Control& c : g.controls)
        jc.push_back({{"q", c.qubit}, {"pol", c.polarity == Polarity::Closed ? "closed" : "open"}});
    nlohmann::json j{{"kind", gate_kind_name(g.kind)},
                     {"controls", jc},
                     {"targets", g.targets},
                     {"width", g.width},
                     {"label", g.label}};
    if (g.kind == GateKind::Ry) j["angle"] = g.angle;
    return j;
}

GateKind kind_from_name(const std::string& s) {
    if (s == "X") return GateKind::X;
    if (s == "Z") return GateKind::Z;
    if (s == "H") return GateKind::H;
    if (s == "Ry") return GateKind::Ry;
    if (s == "MCX") return GateKind::MCX;
    if (s == "BlockSwap") return GateKind::BlockSwap;
    throw std::invalid_argument("unknown gate kind: " + s);
}

}  // namespace

std::string circuit_to_json(const Circuit& c) {
    nlohmann::json jg = nlohmann::json::array();
    for (const Gate& g : c.gates) jg.push_back(gate_to_json(g));
    nlohmann::json j{{"num_qubits", c.num_qubits}, {"gates", jg}};
    if (!c.qubit_names.empty()) j["qubit_names"] = c.qubit_names;
    return j.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Circuit c;
    c.num_qubits = j.at("num_qubits").get<int>();
    if (j.contains("qubit_names")) c.qubit_names = j["qubit_names"].get<std::vector<std::string>>();
    for (const auto& jg : j.at("gates")) {
        Gate g;
        g.kind = kind_from_name(jg.at("kind").get<std::string>());
        for (const auto& jc : jg.at("controls")) {
            g.controls.push_back({jc.at("q").get<int>(),
                                  jc.at("pol").get<std::string>() == "closed" ? Polarity::Closed
                                                                              : Polarity::Open});
        }
        g.targets = jg.at("targets").get<std::vector<int>>();
        g.width = jg.value("width", 0);
        g.angle = jg.value("angle", 0.0);
        g.label = jg.value("label", std::string{});
        c.append(std::move(g));
    }
    return c;
}

std::string report_to_json(const ResourceReport& r) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [k, v] : r.multicontrol_histogram) hist[std::to_string(k)] = v;
    nlohmann::json j{{"gate_count_by_kind", r.gate_count_by_kind},
                     {"multicontrol_histogram", hist},
                     {"swap_count", r.swap_count},
                     {"ancilla_count", r.ancilla_count},
                     {"depth", r.depth},
                     {"cnot_equivalent", r.cnot_equivalent}};
    return j.dump(2);
}

}  // namespace antisymq
