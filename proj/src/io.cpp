#include "acp/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace acp {

namespace {

u128 parse_u128(const std::string& s, const std::string& what) {
    if (s.empty()) throw ParseError("empty " + what);
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in " + what + ": '" + s + "'");
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
}

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

}  // namespace

std::string format_elem(const Field* level, const Elem& e) {
    if (e.is_zero()) return "0";
    if (e.is_one()) return "1";
    // prime-subfield values print as integers at any level
    u128 v = e.value();
    if (v < level->characteristic()) return u128_str(v);
    if (level->size() <= (u128{1} << 16)) {
        auto d = level->dlog(e);
        if (d) return *d == 1 ? "w" : "w^" + std::to_string(*d);
    }
    return u128_str(v);
}

Elem parse_elem(const Field* level, const std::string& token) {
    if (token.empty()) throw ParseError("empty element token");
    if (token == "w") return level->primitive_element();
    if (token.rfind("w^", 0) == 0) {
        u128 e = parse_u128(token.substr(2), "exponent");
        return level->primitive_element().pow(e);
    }
    if (token.front() == '[') {
        if (token.back() != ']') throw ParseError("unterminated coefficient list: '" + token + "'");
        if (!level->base()) throw ParseError("coefficient lists need an extension field");
        std::vector<Elem> coeffs;
        std::string body = token.substr(1, token.size() - 2);
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ',')) {
            u128 v = parse_u128(part, "coefficient");
            if (v >= level->base()->size()) throw ParseError("coefficient out of range: '" + part + "'");
            coeffs.push_back(level->base()->from_value(v));
        }
        if (coeffs.size() > level->degree())
            throw ParseError("too many coefficients in '" + token + "'");
        while (coeffs.size() < level->degree()) coeffs.push_back(level->base()->zero());
        return level->element(coeffs);
    }
    u128 v = parse_u128(token, "element");
    if (v >= level->size()) throw ParseError("element value out of range: '" + token + "'");
    return level->from_value(v);
}

std::string format_vector(std::span<const Elem> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_elem(v[i].field(), v[i]);
    }
    return out + ")";
}

std::string format_matrix(const Mat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += " ";
            out += format_elem(m.field(), m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

CodeFile parse_code_text(const std::string& text, const std::string& source_name) {
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(ss, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::stringstream probe(line);
            std::string tok;
            if (probe >> tok) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(source_name + ": missing header line");
    std::stringstream hs(line);
    std::string kind;
    u64 p = 0, k = 0, m = 0, n = 0;
    if (!(hs >> kind >> p >> k >> m >> n) || (kind != "additive" && kind != "linear"))
        throw ParseError(source_name + ": header must be 'additive|linear p k m n'", lineno);

    CodeFile cf;
    cf.additive = kind == "additive";
    cf.tower = FieldTower::build(p, k, m);
    cf.n = n;

    std::vector<std::vector<Elem>> rows;
    while (next_line()) {
        std::stringstream rs(line);
        std::string tok;
        std::vector<Elem> row;
        std::size_t col = 0;
        while (rs >> tok) {
            ++col;
            try {
                row.push_back(parse_elem(cf.tower.top(), tok));
            } catch (const ParseError& e) {
                throw ParseError(source_name + ": " + e.what(), lineno, col);
            }
        }
        if (row.size() != n)
            throw ParseError(source_name + ": row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n),
                             lineno);
        rows.push_back(std::move(row));
    }
    cf.rows = rows.empty() ? Mat(cf.tower.top(), 0, n) : Mat::from_rows(cf.tower.top(), rows);
    return cf;
}

CodeFile parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_code_text(buf.str(), path);
}

std::vector<Elem> parse_elem_list(const Field* level, const std::string& text) {
    std::vector<Elem> out;
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
        if (cur.empty()) return;
        out.push_back(parse_elem(level, cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    flush();
    return out;
}

FormSpec parse_form(const FieldTower& t, std::size_t n, const std::string& mu_text,
                    const std::string& sigma_text, unsigned pi_exp) {
    std::vector<Elem> mu;
    if (mu_text.empty()) {
        mu.assign(n, t.top()->one());
    } else {
        mu = parse_elem_list(t.top(), mu_text);
        if (mu.size() != n) throw ParseError("mu must list exactly n elements");
    }
    std::vector<std::size_t> sigma(n);
    if (sigma_text.empty() || sigma_text == "id") {
        for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
    } else if (sigma_text == "antidiag") {
        sigma = antidiagonal_sigma(n);
    } else {
        std::stringstream ss(sigma_text);
        std::string part;
        std::size_t i = 0;
        while (std::getline(ss, part, ',')) {
            if (i >= n) throw ParseError("sigma lists too many images");
            u128 img = parse_u128(part, "permutation image");
            if (img < 1 || img > n) throw ParseError("permutation image out of range: '" + part + "'");
            sigma[i++] = static_cast<std::size_t>(img - 1);
        }
        if (i != n) throw ParseError("sigma must list exactly n images");
    }
    try {
        return FormSpec::make(t, std::move(mu), std::move(sigma), pi_exp);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad pairing data: ") + e.what());
    }
}

}  // namespace acp
