#include "codec.hpp"

#include <fstream>
#include <algorithm>
#include <sstream>

namespace mpls::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed number: '" + s + "'");
    }
    if (used != s.size()) throw DomainError("malformed number: '" + s + "'");
    return v;
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed integer: '" + s + "'");
    }
    if (used != s.size()) throw DomainError("malformed integer: '" + s + "'");
    return v;
}

std::string format_cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

cd parse_complex(const std::string& s) {
    if (s.rfind("e:", 0) == 0) {
        Q t = parse_q(s.substr(2));
        return RationalAngle(t).value();
    }
    auto parts = split(s, ',');
    if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
    if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
    throw DomainError("malformed complex number: '" + s + "' (expected re,im or e:t)");
}

std::vector<cd> parse_complex_list(const std::string& s) {
    std::vector<cd> out;
    if (s.empty()) return out;
    for (const auto& part : split(s, ';')) out.push_back(parse_complex(part));
    return out;
}

MultiplicativeCharacter parse_character(long p, const std::string& spec) {
    auto f = split(spec, ':');
    // "e:t" values contain a colon; re-join them.
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == "e" && i + 1 < f.size()) {
            parts.push_back("e:" + f[i + 1]);
            ++i;
        } else {
            parts.push_back(f[i]);
        }
    }
    if (parts.empty()) throw DomainError("empty character spec");
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i) -> const std::string& {
        if (i >= parts.size()) throw DomainError("character spec '" + spec + "' is missing a field");
        return parts[i];
    };
    auto pi_value = [&](std::size_t i) { return i < parts.size() ? parse_complex(parts[i]) : cd(1.0); };
    if (kind == "trivial") return MultiplicativeCharacter::unramified(p, 1.0);
    if (kind == "unramified") return MultiplicativeCharacter::unramified(p, parse_complex(arg(1)));
    if (kind == "legendre") return MultiplicativeCharacter::legendre(p, pi_value(1));
    if (kind == "generator")
        return MultiplicativeCharacter::from_generator(p, static_cast<int>(parse_long(arg(1))), parse_complex(arg(2)),
                                                       pi_value(3));
    if (kind == "two-adic") {
        if (p != 2) throw DomainError("two-adic character requested at p = " + std::to_string(p));
        return MultiplicativeCharacter::two_adic(static_cast<int>(parse_long(arg(1))),
                                                 static_cast<int>(parse_long(arg(2))), parse_complex(arg(3)),
                                                 pi_value(4));
    }
    throw DomainError("unknown character kind '" + kind + "'");
}

json load_json(const std::string& inline_or_path) {
    std::ifstream in(inline_or_path);
    try {
        if (in) return json::parse(in);
        return json::parse(inline_or_path);
    } catch (const json::exception& e) {
        throw DomainError("malformed JSON in '" + inline_or_path + "': " + e.what());
    }
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw DomainError("matrix must be a non-empty array of rows");
    std::vector<std::vector<Q>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != j[0].size()) throw DomainError("matrix rows must be arrays of equal length");
        std::vector<Q> r;
        for (const auto& v : row) {
            if (v.is_string()) r.push_back(parse_q(v.get<std::string>()));
            else if (v.is_number_integer()) r.push_back(Q(v.get<long>()));
            else throw DomainError("matrix entries must be \"num/den\" strings or integers");
        }
        rows.push_back(std::move(r));
    }
    return QMatrix::from_rows(rows);
}

json to_json(cd z) { return json::array({z.real(), z.imag()}); }

json to_json(const Q& x) { return to_string(x); }

json to_json(const QMatrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json to_json(const GammaRat& g) {
    json zeros = json::array(), poles = json::array();
    for (cd z : g.zeros) zeros.push_back(to_json(z));
    for (cd z : g.poles) poles.push_back(to_json(z));
    return {{"scalar", to_json(g.scalar)}, {"degree", g.degree}, {"zeros", zeros}, {"poles", poles}};
}

json to_json(const LocalCoefDecomposition& d) {
    json J = json::array();
    for (cd z : d.J) J.push_back(to_json(z));
    return {{"p", d.p}, {"k0", d.k0}, {"I0", to_json(d.I0)}, {"I1", to_json(d.I1)}, {"J", J},
            {"chi_at_pi", to_json(d.chi_at_pi)}};
}

json to_json(const verify::Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}};
        if (c.tolerance > 0) {
            jc["max_error"] = c.max_error;
            jc["tolerance"] = c.tolerance;
        }
        if (!c.first_failure.empty()) jc["first_failure"] = c.first_failure;
        checks.push_back(jc);
    }
    return {{"suite", r.suite}, {"title", r.title}, {"passed", r.passed()}, {"checks", checks}};
}

std::string render_table(const json& j) {
    std::ostringstream os;
    std::vector<std::pair<std::string, const json*>> tables;
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
        if (v.is_array() && !v.empty() && v[0].is_object()) {
            tables.emplace_back(k, &v);
            continue;
        }
        os << k << std::string(width - k.size() + 2, ' ') << format_cell(v) << "\n";
    }
    for (const auto& [name, rows] : tables) {
        std::vector<std::string> cols;
        for (const auto& row : *rows)
            for (const auto& [k, v] : row.items())
                if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
        std::vector<std::size_t> w(cols.size());
        std::vector<std::vector<std::string>> cells;
        for (std::size_t c = 0; c < cols.size(); ++c) w[c] = cols[c].size();
        for (const auto& row : *rows) {
            std::vector<std::string> line;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                line.push_back(row.contains(cols[c]) ? format_cell(row[cols[c]]) : "");
                w[c] = std::max(w[c], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        os << "\n" << name << ":\n";
        auto emit = [&](const std::vector<std::string>& line) {
            for (std::size_t c = 0; c < line.size(); ++c) {
                os << line[c];
                if (c + 1 < line.size()) os << std::string(w[c] - line[c].size() + 2, ' ');
            }
            os << "\n";
        };
        emit(cols);
        for (const auto& line : cells) emit(line);
    }
    return os.str();
}

}  // namespace mpls::cli
