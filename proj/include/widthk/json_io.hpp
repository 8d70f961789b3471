#pragma once

// JSON schemas for the CLI surface.
//
// System files: {"n": 4, "matrices": [[[...]]], "label": "..."} with entries
// given as JSON integers or "p/q" strings; output always uses strings.
// Symmetry and shape are validated on load.

#include <widthk/chern.hpp>
#include <widthk/systems.hpp>

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

namespace widthk {

using nlohmann::json;

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("entry must be an integer or a \"p/q\" string");
}

inline json vector_to_json(const Vector& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(rational_to_json(v[i]));
    return a;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json system_to_json(const SymMatrixSystem& s) {
    json out;
    out["n"] = s.n;
    json ms = json::array();
    for (const auto& h : s.matrices) ms.push_back(matrix_to_json(h.to_matrix()));
    out["matrices"] = std::move(ms);
    if (!s.label.empty()) out["label"] = s.label;
    return out;
}

inline SymMatrixSystem system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("matrices"))
        throw std::invalid_argument("system: expected {\"n\": ..., \"matrices\": [...]}");
    const auto n = j.at("n").get<std::size_t>();
    if (n == 0) throw std::invalid_argument("system: n must be positive");
    const auto& ms = j.at("matrices");
    if (!ms.is_array() || ms.empty()) throw std::invalid_argument("system: matrices must be a nonempty array");

    std::vector<SymMatrix> out;
    for (const auto& mj : ms) {
        if (!mj.is_array() || mj.size() != n) throw std::invalid_argument("system: matrix must have n rows");
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& row = mj.at(i);
            if (!row.is_array() || row.size() != n)
                throw std::invalid_argument("system: matrix row must have n entries");
            for (std::size_t c = 0; c < n; ++c) m(i, c) = rational_from_json(row.at(c));
        }
        out.push_back(SymMatrix::from_matrix(m)); // throws when not symmetric
    }
    std::string label = j.value("label", std::string{});
    return SymMatrixSystem{n, std::move(out), std::move(label)};
}

inline json witness_to_json(const Witness& w) {
    json out;
    json idx = json::array();
    for (std::size_t i : w.indices) idx.push_back(i + 1); // 1-based for output
    out["indices"] = std::move(idx);
    out["u"] = vector_to_json(w.u);
    return out;
}

inline json width_report_to_json(const WidthReport& r) {
    json out;
    out["k"] = r.k;
    out["holds"] = r.holds;
    switch (r.mode) {
        case WidthMode::symbolic: out["mode"] = "symbolic"; break;
        case WidthMode::symmetrized: out["mode"] = "symmetrized"; break;
        case WidthMode::randomized: out["mode"] = "randomized"; break;
    }
    if (r.trials) out["trials"] = *r.trials;
    if (r.seed) out["seed"] = *r.seed;
    if (r.witness) out["witness"] = witness_to_json(*r.witness);
    if (r.failure_probability_bound)
        out["failure_probability_bound"] = rational_to_json(*r.failure_probability_bound);
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

inline json special_structure_to_json(const SpecialStructure& s) {
    json out;
    json np = json::array();
    for (const auto& v : s.nprime_basis) np.push_back(vector_to_json(v));
    out["nprime_basis"] = std::move(np);
    json fb = json::array();
    for (const auto& v : s.f_basis.vectors) fb.push_back(vector_to_json(v));
    out["f_basis"] = std::move(fb);
    out["congruence_a"] = matrix_to_json(s.congruence_a);
    return out;
}

inline std::string special_status_name(SpecialStatus st) {
    switch (st) {
        case SpecialStatus::not_attempted: return "not_attempted";
        case SpecialStatus::special: return "special";
        case SpecialStatus::not_special: return "not_special";
        case SpecialStatus::undetermined_over_rationals: return "undetermined_over_rationals";
    }
    return "unknown";
}

inline json classify_report_to_json(const ClassifyReport& r) {
    json out;
    out["n"] = r.n;
    out["r"] = r.r;
    out["span_rank"] = r.span_rank;
    out["common_kernel_dim"] = r.common_kernel_dim;
    out["nondegenerate"] = r.nondegenerate;
    json widths = json::object();
    for (const auto& [k, holds] : r.width_holds) widths[std::to_string(k)] = holds;
    out["width_holds"] = std::move(widths);
    json nk = json::object();
    for (const auto& [k, ok] : r.is_nk) nk[std::to_string(k)] = ok;
    out["is_nk_system"] = std::move(nk);
    json sp;
    sp["status"] = special_status_name(r.special_status);
    if (r.special) sp["structure"] = special_structure_to_json(*r.special);
    out["special"] = std::move(sp);
    return out;
}

inline GeometryDescriptor geometry_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "hypersurface")
        return Hypersurface{j.at("n").get<std::size_t>(), j.at("d").get<unsigned>()};
    if (kind == "complete_intersection" || kind == "ci")
        return CompleteIntersection{j.at("n").get<std::size_t>(),
                                    j.at("degrees").get<std::vector<unsigned>>()};
    if (kind == "product")
        return ProductProj{j.at("a").get<std::size_t>(), j.at("b").get<std::size_t>()};
    throw std::invalid_argument("geometry: unknown kind '" + kind + "'");
}

/// FNV-1a 64-bit content hash, hex encoded.
inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace widthk
