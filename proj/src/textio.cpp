#include "fqlc/textio.hpp"

#include <algorithm>
#include <cctype>

namespace fqlc {

namespace {

std::string strip_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Recursive-descent parser evaluating expressions directly in the polynomial
// ring over the requested level. Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*'? factor)*          (implicit products accepted)
//   factor := atom ['^' uint]
//   atom   := var | 'a' | 't' | uint | '(' expr ')'
class ExprParser {
  public:
    ExprParser(std::string text, TowerPtr tower, Level level, std::optional<char> var)
        : text_(std::move(text)), tower_(std::move(tower)), level_(level), var_(var) {}

    Poly parse() {
        Poly out = expr();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& what) {
        raise(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool starts_atom() const {
        if (done()) return false;
        char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    std::uint64_t parse_uint() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (value > (std::uint64_t(-1) - 9) / 10) fail("number too large");
            value = value * 10 + std::uint64_t(peek() - '0');
            ++pos_;
        }
        return value;
    }

    Poly expr() {
        bool negate = false;
        if (!done() && peek() == '-') {
            negate = true;
            ++pos_;
        }
        Poly acc = term();
        if (negate) acc = -acc;
        while (!done() && (peek() == '+' || peek() == '-')) {
            char op = peek();
            ++pos_;
            Poly rhs = term();
            acc = op == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (!done() && (peek() == '*' || starts_atom())) {
            if (peek() == '*') ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (!done() && peek() == '^') {
            ++pos_;
            std::uint64_t exp = parse_uint();
            if (!base.is_zero() && base.degree() >= 1 && exp > 65536 / std::uint64_t(base.degree()))
                fail("exponent too large");
            return base.pow(exp);
        }
        return base;
    }

    Poly atom() {
        if (done()) fail("unexpected end of input");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (done() || peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t value = parse_uint();
            return Poly::constant(tower_->from_integer(level_, value));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (var_ && c == *var_) return Poly::x(tower_, level_);
            if (c == 'a' && level_ == Level::Ext) return Poly::constant(tower_->generator(Level::Ext));
            if (c == 't' && tower_->base_degree() >= 2) {
                FieldElement t = tower_->generator(Level::Base);
                if (level_ == Level::Ext) t = embed(t);
                return Poly::constant(t);
            }
            --pos_;
            fail(std::string("unknown symbol '") + c + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string text_;
    TowerPtr tower_;
    Level level_;
    std::optional<char> var_;
    std::size_t pos_ = 0;
};

// number of '+'-joined terms in a canonical element string is what decides
// whether it needs parentheses as a coefficient
bool needs_parens(const std::string& element_text) { return element_text.find('+') != std::string::npos; }

std::string format_base_element(const FieldElement& e) {
    const auto& digits = e.digits();
    int d = int(digits.size());
    if (d == 1) return std::to_string(digits[0]);
    std::string out;
    for (int k = d - 1; k >= 0; --k) {
        std::uint32_t c = digits[std::size_t(k)];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += 't';
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string format_element(const FieldElement& e) {
    if (e.level() == Level::Base) return format_base_element(e);
    std::vector<FieldElement> coeffs = e.coeffs();
    std::string out;
    for (int j = int(coeffs.size()) - 1; j >= 0; --j) {
        const FieldElement& c = coeffs[std::size_t(j)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        std::string cs = format_base_element(c);
        if (j == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) out += (needs_parens(cs) ? "(" + cs + ")" : cs) + "*";
        out += 'a';
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

std::string format_poly(const Poly& f) { return format_poly(f, 'x'); }

std::string format_poly(const Poly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        FieldElement c = f.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        std::string cs = format_element(c);
        if (k == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) out += (needs_parens(cs) ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string format_sequence(const Sequence& s) {
    std::string out;
    for (const auto& term : s.terms()) {
        if (!out.empty()) out += ',';
        out += format_element(term);
    }
    return out;
}

std::string format_factorization(const Factorization& fz) {
    std::string out = format_element(fz.unit);
    for (const auto& [factor, mult] : fz.factors)
        out += " * (" + format_poly(factor) + ")^" + std::to_string(mult);
    return out;
}

FieldElement parse_element(const std::string& text, const TowerPtr& tower, Level level) {
    Poly value = ExprParser(strip_whitespace(text), tower, level, std::nullopt).parse();
    if (value.is_zero()) return tower->zero(level);
    require(value.degree() == 0, ErrorCode::ParseError, "'" + text + "' is not a field element");
    return value.coeff(0);
}

Poly parse_poly(const std::string& text, const TowerPtr& tower, Level level) {
    return parse_poly(text, tower, level, 'x');
}

Poly parse_poly(const std::string& text, const TowerPtr& tower, Level level, char var) {
    return ExprParser(strip_whitespace(text), tower, level, var).parse();
}

Sequence parse_sequence(const std::string& text, const TowerPtr& tower, Level level) {
    std::string stripped = strip_whitespace(text);
    std::vector<FieldElement> terms;
    if (!stripped.empty()) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = stripped.find(',', start);
            std::string piece = stripped.substr(start, comma == std::string::npos ? comma : comma - start);
            terms.push_back(parse_element(piece, tower, level));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return Sequence(tower, level, std::move(terms));
}

Factorization parse_factorization(const std::string& text, const TowerPtr& tower, Level level) {
    std::string stripped = strip_whitespace(text);
    require(!stripped.empty(), ErrorCode::ParseError, "empty factorization");

    // split at parenthesis-depth-zero '*'
    std::vector<std::string> chunks;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < stripped.size(); ++i) {
        char c = stripped[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            chunks.push_back(stripped.substr(start, i - start));
            start = i + 1;
        }
    }
    chunks.push_back(stripped.substr(start));

    // the unit is the longest chunk prefix that parses as an element; factor
    // chunks always contain the variable, so they can never be swallowed
    std::size_t unit_end = 0;
    FieldElement unit = tower->zero(level);
    std::string joined;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        std::string candidate = joined.empty() ? chunks[i] : joined + "*" + chunks[i];
        try {
            unit = parse_element(candidate, tower, level);
        } catch (const Error&) {
            break;
        }
        joined = std::move(candidate);
        unit_end = i + 1;
    }
    require(unit_end > 0, ErrorCode::ParseError, "factorization must start with a unit element");

    Factorization out{unit, {}};
    for (std::size_t i = unit_end; i < chunks.size(); ++i) {
        const std::string& chunk = chunks[i];
        require(!chunk.empty() && chunk.front() == '(', ErrorCode::ParseError,
                "expected a parenthesized factor, got '" + chunk + "'");
        std::size_t close = chunk.rfind(')');
        require(close != std::string::npos, ErrorCode::ParseError, "unbalanced parentheses in factor");
        Poly factor = parse_poly(chunk.substr(1, close - 1), tower, level);
        int mult = 1;
        if (close + 1 < chunk.size()) {
            require(chunk[close + 1] == '^', ErrorCode::ParseError, "expected '^' after factor");
            std::string exp = chunk.substr(close + 2);
            require(!exp.empty() && std::all_of(exp.begin(), exp.end(),
                                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }),
                    ErrorCode::ParseError, "bad factor multiplicity");
            mult = std::stoi(exp);
            require(mult >= 1, ErrorCode::ParseError, "factor multiplicity must be >= 1");
        }
        out.factors.emplace_back(std::move(factor), mult);
    }
    return out;
}

TowerPtr build_tower_text(std::uint64_t p, const std::optional<std::string>& base_modulus,
                          const std::optional<std::string>& ext_modulus) {
    TowerPtr prime_field = FieldTower::build(p, std::nullopt, std::nullopt);

    std::optional<std::vector<std::uint32_t>> base_digits;
    TowerPtr base_field = prime_field;
    if (base_modulus) {
        Poly parsed = parse_poly(*base_modulus, prime_field, Level::Base, 't');
        require(!parsed.is_zero() && parsed.degree() >= 1, ErrorCode::BadInput,
                "base modulus must have degree >= 1");
        std::vector<std::uint32_t> digits;
        for (const auto& c : parsed.coeffs()) digits.push_back(c.digits()[0]);
        base_digits = digits;
        base_field = FieldTower::build(p, base_digits, std::nullopt);
    }

    std::optional<std::vector<std::vector<std::uint32_t>>> ext_rows;
    if (ext_modulus) {
        Poly parsed = parse_poly(*ext_modulus, base_field, Level::Base, 'a');
        require(!parsed.is_zero() && parsed.degree() >= 1, ErrorCode::BadInput,
                "extension modulus must have degree >= 1");
        std::vector<std::vector<std::uint32_t>> rows;
        for (const auto& c : parsed.coeffs()) rows.push_back(c.digits());
        ext_rows = std::move(rows);
    }
    return FieldTower::build(p, base_digits, ext_rows);
}

std::optional<std::string> describe_base_modulus(const TowerPtr& tower) {
    if (!tower->has_base_modulus()) return std::nullopt;
    TowerPtr prime_field = FieldTower::build(tower->characteristic(), std::nullopt, std::nullopt);
    std::vector<FieldElement> coeffs;
    for (auto digit : tower->base_modulus_digits())
        coeffs.push_back(prime_field->from_digits(Level::Base, {digit}));
    return format_poly(Poly::from_coeffs(prime_field, Level::Base, std::move(coeffs)), 't');
}

std::optional<std::string> describe_ext_modulus(const TowerPtr& tower) {
    if (!tower->has_ext_modulus()) return std::nullopt;
    std::vector<FieldElement> coeffs;
    for (const auto& row : tower->ext_modulus_coeffs()) coeffs.push_back(tower->from_digits(Level::Base, row));
    return format_poly(Poly::from_coeffs(tower, Level::Base, std::move(coeffs)), 'a');
}

}  // namespace fqlc
