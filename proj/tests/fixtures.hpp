#pragma once

// Shared fixed inputs used across the unit and acceptance suites: the two
// GF(4) length-6 / length-3 additive pairs, the GF(4) rank-criterion example
// with its parity-check matrices, the twelve GF(4) trace-code generators,
// the GF(25) Reed-Solomon pair and the GF(64) expansion pair.

#include <sstream>
#include <string>
#include <vector>

#include "acp/code.hpp"

namespace fixtures {

using namespace acp;

inline FieldTower f4() { return FieldTower::build(2, 1, 2); }
inline FieldTower f25() { return FieldTower::build(5, 1, 2); }
inline FieldTower f64() { return FieldTower::build(2, 3, 2); }
inline FieldTower f9() { return FieldTower::build(3, 1, 2); }

/// Parses a matrix given row-by-row (rows separated by ';'), with tokens
/// resolved by the supplied map from token to element.
inline Mat parse_mat(const Field* field, const std::string& text,
                     const std::function<Elem(const std::string&)>& tok) {
    std::vector<std::vector<Elem>> rows;
    std::stringstream ss(text);
    std::string rowtext;
    while (std::getline(ss, rowtext, ';')) {
        std::vector<Elem> row;
        std::stringstream rs(rowtext);
        std::string t;
        while (rs >> t) row.push_back(tok(t));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return Mat::from_rows(field, rows);
}

/// GF(4) tokens: 0, 1, w, w2.
inline Mat mat_f4(const FieldTower& t, const std::string& text) {
    Elem w = t.alpha();
    return parse_mat(t.top(), text, [&](const std::string& s) -> Elem {
        if (s == "0") return t.top()->zero();
        if (s == "1") return t.top()->one();
        if (s == "w") return w;
        if (s == "w2") return w * w;
        throw std::invalid_argument("bad GF(4) token: " + s);
    });
}

/// Integer tokens embedded through the prime subfield.
inline Mat mat_int(const FieldTower& t, const Field* level, const std::string& text) {
    return parse_mat(level, text, [&](const std::string& s) -> Elem {
        return level->from_int(static_cast<u64>(std::stoull(s)));
    });
}

/// The 7-th root of unity used by the GF(64) fixtures: the least root of
/// X^3 + X^2 + 1 in value order (u = a + 1 = a^3 for the residue class a).
inline Elem f64_root(const FieldTower& t) { return t.embed_to_top(t.mid()->from_value(3)); }

/// GF(64) tokens: 0, 1, and uN for the N-th power of the embedded GF(8)
/// 7-th root u.
inline Mat mat_f64(const FieldTower& t, const std::string& text) {
    Elem u = f64_root(t);
    return parse_mat(t.top(), text, [&](const std::string& s) -> Elem {
        if (s == "0") return t.top()->zero();
        if (s == "1") return t.top()->one();
        if (s[0] == 'u') return u.pow(static_cast<u64>(std::stoull(s.substr(1))));
        throw std::invalid_argument("bad GF(64) token: " + s);
    });
}

// --- length-6 GF(4) pair (rank-necessary reproduction) ----------------------

inline Mat g1_len6(const FieldTower& t) {
    return mat_f4(t,
                  "1 0 0 0 0 1;"
                  "w 0 0 0 0 w;"
                  "0 1 0 0 0 1;"
                  "0 w 0 0 0 w;"
                  "0 0 1 0 0 1;"
                  "0 0 w 0 0 w;"
                  "0 0 0 1 0 1;"
                  "0 0 0 w 0 w");
}

inline Mat g2_len6(const FieldTower& t) {
    return mat_f4(t,
                  "0 0 0 0 1 0;"
                  "0 0 0 0 w 0;"
                  "1 1 1 1 0 1;"
                  "w w w w 0 w");
}

// --- length-3 GF(4) pair with a common word (necessity-only) ----------------

inline Mat g1_counter(const FieldTower& t) {
    return mat_f4(t,
                  "1 1 0;"
                  "w w 0;"
                  "w2 0 w2");
}

inline Mat g2_counter(const FieldTower& t) {
    return mat_f4(t,
                  "1 1 1;"
                  "w w w;"
                  "w w 0");
}

// --- length-3 GF(4) pair with explicit parity checks (exact criterion) ------

inline Mat g1_iff(const FieldTower& t) {
    return mat_f4(t,
                  "1 1 0;"
                  "w 0 w;"
                  "0 w w");
}

inline Mat g2_iff(const FieldTower& t) {
    return mat_f4(t,
                  "1 0 1;"
                  "1 1 1;"
                  "w w w");
}

inline Mat h1_iff(const FieldTower& t) {
    return mat_f4(t,
                  "1 1 1;"
                  "w w w;"
                  "w2 w2 0");
}

inline Mat h2_iff(const FieldTower& t) {
    return mat_f4(t,
                  "1 0 1;"
                  "1 1 0;"
                  "w 0 w");
}

inline Mat tr_h1_g2t_expected(const FieldTower& t) {
    return mat_int(t, t.mid(),
                   "0 0 1;"
                   "0 1 1;"
                   "1 0 0");
}

inline Mat tr_h2_g1t_expected(const FieldTower& t) {
    return mat_int(t, t.mid(),
                   "0 0 1;"
                   "0 1 1;"
                   "1 0 1");
}

// --- twelve GF(4) additive generators with binary trace-code data -----------

struct TraceRow {
    std::string gen;
    std::size_t n, k, d;
    bool lcd;
};

inline std::vector<TraceRow> trace_table() {
    return {
        {"w w2 0 w 0; 0 w w2 0 w", 5, 2, 3, false},
        {"w w2 0 w w 0; 0 w w2 0 w w", 6, 2, 4, false},
        {"w 0 w2 0 w w 0 0; 0 w 0 w2 0 w w 0; 0 0 w 0 w2 0 w w", 8, 3, 4, false},
        {"w 0 w2 0 w w 0 0; 0 w 0 w2 0 w w 0; 0 0 w 0 0 0 w w", 8, 3, 3, true},
        {"w w 0 w w 0 w w 0; 0 w w 0 w w 0 w w", 9, 2, 6, true},
        {"w w2 0 w 0 w w 0 0; 0 w w2 0 w 0 w w 0; 0 0 w w 0 w2 0 w2 w", 9, 3, 3, true},
        {"w 1 0 w 0 w w 0 0; 0 w 1 0 w 0 w w 0; 0 0 w w 0 w2 0 w2 w", 9, 3, 4, true},
        {"w w 0 w w 0 w w2 w 0; 0 w w 0 w w 0 w w2 w", 10, 2, 6, true},
        {"w w 0 0 w 0 w w 0 0; 0 w w 0 0 w2 0 w w 0; 0 0 w w 0 0 w 0 w2 w", 10, 3, 5, false},
        {"w w 0 0 w 0 w 0 0 0; 0 w w 0 0 w 0 w 0 0; 0 0 w w 0 0 w2 0 w 0; 0 0 0 w w 0 0 w 0 w", 10, 4,
         4, true},
        {"w w 0 w w 0 w w 0 w 0; 0 w w 0 w w 0 w w 0 w", 11, 2, 7, false},
        {"w w 0 0 w w 0 0 w 0 0; 0 w w 0 0 w w 0 0 w 0; 0 0 w w 0 0 w w2 0 0 w", 11, 3, 5, true},
    };
}

// --- GF(25) Reed-Solomon pair ------------------------------------------------

inline Mat rs_g(const FieldTower& t) { return mat_int(t, t.top(), "1 1 1 1; 1 2 3 4"); }
inline Mat rs_h(const FieldTower& t) { return mat_int(t, t.top(), "1 0 2 2; 0 1 3 1"); }

inline std::vector<Elem> rs_scaling(const FieldTower& t) {
    return {t.top()->from_int(2), t.top()->one(), t.top()->one(), t.top()->one()};
}

// --- GF(64) expansion pair ---------------------------------------------------

inline Mat g1_f64(const FieldTower& t) {
    return mat_f64(t,
                   "1 1 1 1 1 1 1;"
                   "1 u1 u2 u3 u4 u5 u6;"
                   "1 u6 u5 u4 u3 u2 u1;"
                   "1 u2 u4 u6 u1 u3 u5;"
                   "1 u5 u3 u1 u6 u4 u2");
}

inline Mat g2_f64(const FieldTower& t) {
    return mat_f64(t,
                   "1 0 1 u6 u4 u4 u6;"
                   "0 1 u6 u4 u4 u6 1");
}

inline Mat gex1_f64(const FieldTower& t) {
    return mat_f64(t,
                   "u5 u6 u3 u4 u1 u2 1 0;"
                   "0 1 1 1 1 1 1 1;"
                   "0 1 u1 u2 u3 u4 u5 u6;"
                   "0 1 u6 u5 u4 u3 u2 u1;"
                   "0 1 u2 u4 u6 u1 u3 u5;"
                   "0 1 u5 u3 u1 u6 u4 u2");
}

inline Mat gex2_f64(const FieldTower& t) {
    return mat_f64(t,
                   "u6 1 0 1 u6 u4 u4 u6;"
                   "u3 0 1 u6 u4 u4 u6 1");
}

inline Elem lambda_f64(const FieldTower& t) { return f64_root(t).pow(5); }

inline std::vector<Elem> p_row_f64(const FieldTower& t) {
    Mat row = mat_f64(t, "u6 u3 u4 u1 u2 1 0");
    return row.row(0);
}

// --- two GF(2) linear pairs and the combining scalars ------------------------

inline Mat comb_g1(const FieldTower& t) { return mat_int(t, t.mid(), "1 1 0 1; 0 1 1 1"); }
inline Mat comb_g2(const FieldTower& t) { return mat_int(t, t.mid(), "1 1 1 0; 1 0 1 1"); }
inline Mat comb_g3(const FieldTower& t) { return mat_int(t, t.mid(), "1 1 1 0"); }
inline Mat comb_g4(const FieldTower& t) { return mat_int(t, t.mid(), "1 1 0 0; 1 0 1 0; 0 0 0 1"); }

inline std::vector<Elem> comb_alphas(const FieldTower& t) { return {t.top()->one(), t.alpha()}; }

}  // namespace fixtures
