#include "twobridge/format.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "twobridge/closed_form.hpp"
#include "twobridge/verify.hpp"

namespace twobridge {

namespace {

void append_signed(std::ostringstream& out, bool first, Coeff coeff,
                   const std::string& monomial) {
    if (first) {
        if (coeff < 0) out << "-";
    } else {
        out << (coeff < 0 ? " - " : " + ");
    }
    Coeff mag = std::abs(coeff);
    if (mag != 1 || monomial.empty()) out << mag;
    out << monomial;
}

std::string power(const std::string& var, Coeff exp) {
    if (exp == 0) return "";
    if (exp == 1) return var;
    return var + "^" + std::to_string(exp);
}

} // namespace

std::string poly_to_string(const LaurentPoly1& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_signed(out, first, c, power("t", e[0]));
        first = false;
    }
    return out.str();
}

std::string poly_to_string(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = power("x", e[0]);
        std::string ypart = power("y", e[1]);
        if (!mono.empty() && !ypart.empty()) mono += " ";
        mono += ypart;
        if (!mono.empty() && std::abs(c) != 1) mono = " " + mono;
        append_signed(out, first, c, mono);
        first = false;
    }
    return out.str();
}

namespace {

// Shared monomial-sum parser. Grammar per term: [sign] [integer] {var [^ int]}.
template <std::size_t N>
LaurentPoly<N> parse_poly(const std::string& text,
                          const std::array<char, N>& var_names) {
    LaurentPoly<N> result;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> Coeff {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw DomainError("expected integer at offset " + std::to_string(start));
        return std::stoll(text.substr(start, pos - start));
    };

    skip_ws();
    bool any = false;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (any) {
            throw DomainError("expected + or - at offset " + std::to_string(pos));
        }
        Coeff coeff = 1;
        bool saw_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_int();
            saw_coeff = true;
        }
        std::array<Coeff, N> exps{};
        bool saw_any_var = false;
        bool saw_var = true;
        while (saw_var) {
            skip_ws();
            saw_var = false;
            for (std::size_t k = 0; k < N; ++k) {
                if (pos < text.size() && text[pos] == var_names[k]) {
                    ++pos;
                    Coeff e = 1;
                    if (pos < text.size() && text[pos] == '^') {
                        ++pos;
                        e = parse_int();
                    }
                    exps[k] += e;
                    saw_var = true;
                    saw_any_var = true;
                    break;
                }
            }
        }
        if (!saw_coeff && !saw_any_var) {
            throw DomainError("expected term at offset " + std::to_string(pos));
        }
        result.add_term(exps, sign * coeff);
        any = true;
        skip_ws();
    }
    if (!any) throw DomainError("empty polynomial string");
    return result;
}

} // namespace

LaurentPoly1 parse_poly1(const std::string& text) {
    if (text == "0") return LaurentPoly1::zero();
    return parse_poly<1>(text, {'t'});
}

LaurentPoly2 parse_poly2(const std::string& text) {
    if (text == "0") return LaurentPoly2::zero();
    return parse_poly<2>(text, {'x', 'y'});
}

namespace {

template <std::size_t N>
nlohmann::json terms_json(const LaurentPoly<N>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::array();
        for (Coeff x : e) exps.push_back(x);
        terms.push_back(nlohmann::json::array({exps, c}));
    }
    return terms;
}

nlohmann::json record_common(const TwoBridgeParam& param) {
    return {
        {"p", param.p()},
        {"q", param.q()},
        {"kind", param.is_link() ? "link" : "knot"},
    };
}

template <std::size_t N>
LaurentPoly<N> poly_from_terms(const nlohmann::json& record) {
    LaurentPoly<N> p;
    for (const auto& term : record.at("terms")) {
        std::array<Coeff, N> e{};
        for (std::size_t k = 0; k < N; ++k) e[k] = term.at(0).at(k).get<Coeff>();
        p.add_term(e, term.at(1).get<Coeff>());
    }
    return p;
}

} // namespace

nlohmann::json record_json(const TwoBridgeParam& param, const LaurentPoly1& poly) {
    nlohmann::json rec = record_common(param);
    rec["vars"] = nlohmann::json::array({"t"});
    rec["terms"] = terms_json(poly);
    rec["polynomial"] = poly_to_string(poly);
    rec["coefficient_profile"] = coefficient_profile(poly);
    return rec;
}

nlohmann::json record_json(const TwoBridgeParam& param, const LaurentPoly2& poly) {
    nlohmann::json rec = record_common(param);
    rec["vars"] = nlohmann::json::array({"x", "y"});
    rec["terms"] = terms_json(poly);
    rec["polynomial"] = poly_to_string(poly);
    return rec;
}

LaurentPoly1 poly1_from_json(const nlohmann::json& record) {
    return poly_from_terms<1>(record);
}

LaurentPoly2 poly2_from_json(const nlohmann::json& record) {
    return poly_from_terms<2>(record);
}

std::string table_csv(Int qmax, bool links_only, bool knots_only) {
    std::ostringstream out;
    out << "p,q,kind,polynomial\n";
    for (const auto& param : all_params(qmax)) {
        if (links_only && !param.is_link()) continue;
        if (knots_only && param.is_link()) continue;
        std::string poly = param.is_link() ? poly_to_string(two_variable_poly(param))
                                           : poly_to_string(minkus_poly(param));
        out << param.p() << "," << param.q() << ","
            << (param.is_link() ? "link" : "knot") << "," << csv_escape(poly) << "\n";
    }
    return out.str();
}

nlohmann::json table_json(Int qmax, bool links_only, bool knots_only) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& param : all_params(qmax)) {
        if (links_only && !param.is_link()) continue;
        if (knots_only && param.is_link()) continue;
        if (param.is_link()) {
            rows.push_back(record_json(param, two_variable_poly(param)));
        } else {
            rows.push_back(record_json(param, minkus_poly(param)));
        }
    }
    return rows;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace twobridge
