#include "triwell/json_io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace triwell {

namespace {

std::string key_of(const std::array<int, 3>& triple) {
    return std::to_string(triple[0]) + std::to_string(triple[1]) + std::to_string(triple[2]);
}

std::string complex_pair(Complex v) {
    return "[" + format_double(v.real()) + "," + format_double(v.imag()) + "]";
}

void dump_expansion(std::ostream& out, const SlaterExpansion& expansion) {
    out << '{';
    bool first = true;
    for (const auto& [key, value] : expansion.coefficients()) {
        if (std::abs(value) <= 1e-12) continue;
        if (!first) out << ',';
        first = false;
        out << '"' << key_of(key) << "\":" << complex_pair(value);
    }
    out << '}';
}

void dump_matrix(std::ostream& out, const Matrix& m) {
    out << '[';
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != 0 || j != 0) out << ',';
            out << complex_pair(m(i, j));
        }
    out << ']';
}

void dump_amplitudes(std::ostream& out, const Vector& v) {
    out << '[';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i != 0) out << ',';
        out << complex_pair(v[i]);
    }
    out << ']';
}

Complex parse_complex(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::runtime_error("complex values must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void dump_outcome_json(std::ostream& out, const ProtocolOutcome& outcome) {
    out << "{\"P\":" << format_double(outcome.probability)
        << ",\"classification\":\"" << to_string(outcome.classification) << '"'
        << ",\"slater\":";
    dump_expansion(out, outcome.final_expansion);
    out << ",\"c3f\":"
        << (outcome.measures.c_nf ? format_double(*outcome.measures.c_nf) : "null")
        << ",\"tau_f\":"
        << (outcome.measures.tau_f ? format_double(*outcome.measures.tau_f) : "null")
        << "}\n";
}

void dump_two_well_json(std::ostream& out, const TwoWellOutcome& outcome) {
    out << "{\"P\":" << format_double(outcome.probability) << ",\"c2f\":"
        << (outcome.measures.c_nf ? format_double(*outcome.measures.c_nf) : "null")
        << ",\"c2_frozen\":"
        << (outcome.measures.c2 ? format_double(*outcome.measures.c2) : "null") << "}\n";
}

void dump_scan_json(std::ostream& out, const ScanReport& report) {
    out << "{\"samples\":" << report.samples << ",\"seed\":" << report.seed
        << ",\"counts\":{\"zero\":" << report.count_zero
        << ",\"slater\":" << report.count_slater << ",\"w_type\":" << report.count_w
        << ",\"ghz_type\":" << report.count_ghz << ",\"other\":" << report.count_other
        << "},\"failures\":[";
    bool first = true;
    for (const ScanFailure& f : report.failures) {
        if (!first) out << ',';
        first = false;
        out << "{\"reason\":\"" << f.reason << "\",\"classification\":\""
            << to_string(f.classification) << "\",\"t\":";
        dump_matrix(out, f.t);
        out << ",\"sigma\":";
        dump_matrix(out, f.s);
        out << '}';
    }
    out << "]}\n";
}

void dump_measures_json(std::ostream& out, const MeasuresOutput& mo) {
    out << "{\"n\":" << mo.n << ",\"d\":" << mo.d;
    const MeasureReport& m = mo.measures;
    if (m.c_nf) out << ",\"c" << mo.n << "f\":" << format_double(*m.c_nf);
    if (m.tau_f) out << ",\"tau_f\":" << format_double(*m.tau_f);
    if (mo.frozen) {
        out << ",\"qubit_amplitudes\":";
        dump_amplitudes(out, mo.qubit_state.amplitudes);
        if (mo.n == 3) {
            const IdentityReport& r = mo.identity;
            out << ",\"c3\":" << format_double(r.c3) << ",\"ratio\":" << format_double(r.ratio)
                << ",\"tau\":" << format_double(r.tau)
                << ",\"identity_ok\":" << (r.identity_ok ? "true" : "false");
        } else if (m.c2) {
            out << ",\"c2\":" << format_double(*m.c2);
        }
    }
    out << "}\n";
}

PureState load_state_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("d"))
        throw std::runtime_error("state file must carry \"n\" and \"d\"");
    const int n = j["n"].get<int>();
    const int d = j["d"].get<int>();
    if (!((n == 2 && d == 4) || (n == 3 && d == 6)))
        throw std::runtime_error("supported shapes are (n, d) = (2, 4) or (3, 6)");

    PureState state(n, d);
    if (j.contains("slater")) {
        for (const auto& [key, value] : j["slater"].items()) {
            if (static_cast<int>(key.size()) != n)
                throw std::runtime_error("slater key has wrong arity: " + key);
            std::vector<int> indices;
            for (char c : key) {
                if (c < '1' || c > '0' + d) throw std::runtime_error("bad slater key: " + key);
                indices.push_back(c - '0');
            }
            for (std::size_t i = 1; i < indices.size(); ++i)
                if (indices[i] <= indices[i - 1])
                    throw std::runtime_error("slater keys must be strictly increasing: " + key);
            state.amplitudes() +=
                parse_complex(value) * slater_determinant(indices, d).amplitudes();
        }
    } else if (j.contains("amplitudes")) {
        const auto& arr = j["amplitudes"];
        if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != state.dim_total())
            throw std::runtime_error("amplitudes must hold d^n entries");
        for (Eigen::Index i = 0; i < state.dim_total(); ++i)
            state.amplitudes()[i] = parse_complex(arr[i]);
    } else {
        throw std::runtime_error("state file needs \"slater\" or \"amplitudes\"");
    }
    if (state.norm() < 1e-15) throw std::runtime_error("state file holds a zero state");
    return state;
}

void dump_state_json(std::ostream& out, const PureState& state) {
    out << "{\"n\":" << state.n_particles() << ",\"d\":" << state.dim_single()
        << ",\"amplitudes\":";
    dump_amplitudes(out, state.amplitudes());
    out << "}\n";
}

}  // namespace triwell
