#include "graphpoly/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace graphpoly {

namespace {

void require_same_vars(const MultiPoly& a, const MultiPoly& b, const char* op) {
    if (a.variables() != b.variables())
        throw std::invalid_argument(std::string("variable-set mismatch in ") + op);
}

}  // namespace

MultiPoly MultiPoly::constant(const Variables& vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Exponents(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::var(const Variables& vars, const std::string& name) {
    MultiPoly p(vars);
    Exponents e(vars.size(), 0);
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    e[static_cast<std::size_t>(it - vars.begin())] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const Variables& vars, Exponents exps, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(exps, c);
    return p;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("exponent vector length does not match variable list");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_vars(*this, rhs, "add");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_vars(*this, rhs, "subtract");
    for (const auto& [e, c] : rhs.terms_) add_term(e, Rational(-c));
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    require_same_vars(lhs, rhs, "multiply");
    MultiPoly out(lhs.vars_);
    Exponents e(lhs.vars_.size());
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly operator-(const MultiPoly& p) {
    MultiPoly out(p.vars_);
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly out(p.vars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : p.terms_) out.terms_.emplace(e, c * coeff);
    return out;
}

int MultiPoly::degree_in(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(idx)]);
    return d;
}

long long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // The map is graded, so the first entry carries the top degree.
    long long g = 0;
    for (int e : terms_.begin()->first) g += e;
    return g;
}

MultiPoly pow(const MultiPoly& p, int e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly acc = MultiPoly::constant(p.variables(), 1);
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

MultiPoly truncate_top(const MultiPoly& p, int k) {
    int q_idx = p.var_index("q");
    MultiPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        int top = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != q_idx) top += e[i];
        if (top == k) out.add_term(e, c);
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, const std::string& name, const MultiPoly& replacement) {
    int idx = p.var_index(name);
    if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    require_same_vars(p, replacement, "substitute");
    MultiPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        int exp = rest[static_cast<std::size_t>(idx)];
        rest[static_cast<std::size_t>(idx)] = 0;
        MultiPoly term = MultiPoly::monomial(p.variables(), rest, c);
        out += term * pow(replacement, exp);
    }
    return out;
}

MultiPoly shift_yz(const MultiPoly& p) {
    const Variables& v = p.variables();
    MultiPoly y_minus_1 = MultiPoly::var(v, "y") - MultiPoly::constant(v, 1);
    MultiPoly z_minus_1 = MultiPoly::var(v, "z") - MultiPoly::constant(v, 1);
    return substitute(substitute(p, "y", y_minus_1), "z", z_minus_1);
}

MultiPoly negate_v(const MultiPoly& p) {
    return substitute(p, "v", -MultiPoly::var(p.variables(), "v"));
}

Rational eval_at(const MultiPoly& p, const std::vector<std::pair<std::string, Rational>>& values) {
    const Variables& vars = p.variables();
    std::vector<Rational> assignment(vars.size());
    std::vector<bool> seen(vars.size(), false);
    for (const auto& [name, value] : values) {
        int idx = p.var_index(name);
        if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
        assignment[static_cast<std::size_t>(idx)] = value;
        seen[static_cast<std::size_t>(idx)] = true;
    }
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (!seen[i]) throw std::invalid_argument("missing assignment for variable '" + vars[i] + "'");
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) term *= assignment[i];
        total += term;
    }
    return total;
}

MultiPoly partial_eval(const MultiPoly& p, const std::string& name, const Rational& value) {
    int idx = p.var_index(name);
    if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    MultiPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        for (int j = 0; j < e[static_cast<std::size_t>(idx)]; ++j) coeff *= value;
        Exponents rest = e;
        rest[static_cast<std::size_t>(idx)] = 0;
        out.add_term(rest, coeff);
    }
    return out;
}

MultiPoly project(const MultiPoly& p, const Variables& target) {
    const Variables& src = p.variables();
    std::vector<int> where(src.size(), -1);
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), src[i]);
        if (it != target.end()) where[i] = static_cast<int>(it - target.begin());
    }
    MultiPoly out(target);
    for (const auto& [e, c] : p.terms()) {
        Exponents ne(target.size(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (where[i] >= 0)
                ne[static_cast<std::size_t>(where[i])] = e[i];
            else if (e[i] != 0)
                throw std::invalid_argument("cannot drop variable '" + src[i] +
                                            "' with nonzero exponent");
        }
        out.add_term(ne, c);
    }
    return out;
}

MultiPoly interpolate_q(const std::string& var,
                        const std::vector<std::pair<Rational, MultiPoly>>& points,
                        int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    std::size_t needed = static_cast<std::size_t>(degree_bound) + 1;
    if (points.size() < needed)
        throw std::invalid_argument("interpolation needs at least " + std::to_string(needed) +
                                    " points, got " + std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("duplicate interpolation node " +
                                            to_string(points[i].first));

    const Variables& value_vars = points.front().second.variables();
    Variables out_vars;
    out_vars.reserve(value_vars.size() + 1);
    out_vars.push_back(var);
    for (const auto& v : value_vars) out_vars.push_back(v);

    MultiPoly q = MultiPoly::var(out_vars, var);
    MultiPoly result = MultiPoly::zero(out_vars);
    for (std::size_t j = 0; j < needed; ++j) {
        // Lagrange basis through the first degree_bound + 1 nodes.
        MultiPoly basis = MultiPoly::constant(out_vars, 1);
        Rational denom = 1;
        for (std::size_t m = 0; m < needed; ++m) {
            if (m == j) continue;
            basis = basis * (q - MultiPoly::constant(out_vars, points[m].first));
            denom *= points[j].first - points[m].first;
        }
        if (points[j].second.variables() != value_vars)
            throw std::invalid_argument("variable-set mismatch among interpolation values");
        result += (Rational(1) / denom) * (basis * project(points[j].second, out_vars));
    }
    for (std::size_t j = needed; j < points.size(); ++j) {
        MultiPoly predicted = project(partial_eval(result, var, points[j].first), value_vars);
        if (predicted != points[j].second)
            throw std::runtime_error("interpolation witness at " + var + "=" +
                                     to_string(points[j].first) +
                                     " disagrees with the reconstruction (degree bound " +
                                     std::to_string(degree_bound) + " is wrong)");
    }
    return result;
}

MultiPoly potts_substitute(const MultiPoly& c, int k) {
    if (c.variables() != vars_qy())
        throw std::invalid_argument("potts_substitute expects a polynomial in (q, y)");
    if (k < 0) throw std::invalid_argument("negative edge count");
    if (!c.is_zero() && c.degree_in("y") > k)
        throw std::invalid_argument("y-degree " + std::to_string(c.degree_in("y")) +
                                    " exceeds the edge count " + std::to_string(k));
    const Variables& out_vars = vars_qv();
    MultiPoly v_plus_1 = MultiPoly::var(out_vars, "v") + MultiPoly::constant(out_vars, 1);
    MultiPoly out = MultiPoly::zero(out_vars);
    for (const auto& [e, coeff] : c.terms()) {
        MultiPoly term = MultiPoly::monomial(out_vars, Exponents{e[0], 0}, coeff);
        out += term * pow(v_plus_1, k - e[1]);
    }
    return out;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.variables()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << to_string(a);
        else if (a == 1)
            os << mono;
        else
            os << to_string(a) << "*" << mono;
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit PolyParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + message);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return text.substr(start, pos - start);
    }
    std::string read_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a variable name");
        return text.substr(start, pos - start);
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const Variables& vars) {
    PolyParser in(text);
    MultiPoly out(vars);
    bool any = false;
    while (!in.eof()) {
        int sign = 1;
        if (in.accept('-'))
            sign = -1;
        else if (in.accept('+')) {
            if (!any) in.fail("unexpected leading '+'");
        } else if (any) {
            in.fail("expected '+' or '-' between terms");
        }
        // One term: optional rational, then variable powers joined by '*'.
        Rational coeff = sign;
        Exponents exps(vars.size(), 0);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
            std::string num = in.read_integer();
            std::string den = "1";
            if (in.accept('/')) den = in.read_integer();
            coeff *= rational_from_string(num + "/" + den);
            saw_factor = true;
            if (!in.accept('*')) {
                out.add_term(exps, coeff);
                any = true;
                continue;
            }
        }
        while (true) {
            std::string name = in.read_name();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) in.fail("unknown variable '" + name + "'");
            int e = 1;
            if (in.accept('^')) e = std::stoi(in.read_integer());
            exps[static_cast<std::size_t>(it - vars.begin())] += e;
            saw_factor = true;
            if (!in.accept('*')) break;
        }
        if (!saw_factor) in.fail("empty term");
        out.add_term(exps, coeff);
        any = true;
    }
    if (!any) throw std::invalid_argument("polynomial parse error: empty input");
    return out;
}

}  // namespace graphpoly
