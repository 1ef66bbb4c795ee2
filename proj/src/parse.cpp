#include "spalg/parse.hpp"

#include <algorithm>
#include <cctype>

namespace spalg {

namespace {

struct Token {
    enum Kind { ident, integer, punct, eof } kind = eof;
    std::string text;
    std::size_t line = 0, col = 0;
};

[[noreturn]] void parse_fail(const Token& at, const std::string& msg) {
    fail("parse error at line " + std::to_string(at.line) + ", column " +
         std::to_string(at.col) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (; k > 0; --k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            t.kind = Token::ident;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Token::integer;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::string(";=+-*/[],").find(c) != std::string::npos) {
            t.kind = Token::punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            t.kind = Token::punct;
            t.text = std::string(1, c);
            parse_fail(t, "unexpected character '" + t.text + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::eof;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const std::optional<Field>& force_field)
        : toks_(std::move(toks)), force_field_(force_field) {}

    ParsedInput run() {
        ParsedInput in;
        bool declared = false;
        if (peek().kind == Token::ident && peek().text == "field") {
            const Token& at = next();
            long long p = expect_integer("field characteristic");
            expect_punct(";");
            try {
                in.field = Field::prime(static_cast<std::uint64_t>(p));
            } catch (const Error& e) {
                parse_fail(at, e.what());
            }
            declared = true;
        }
        if (force_field_) {
            if (declared && !(in.field == *force_field_))
                parse_fail(peek(), "field declared in file conflicts with the requested field");
            in.field = *force_field_;
        }

        if (!(peek().kind == Token::ident && peek().text == "vars"))
            parse_fail(peek(), "expected a 'vars' declaration");
        next();
        while (peek().kind == Token::ident) {
            const Token& v = next();
            if (std::find(in.vars.begin(), in.vars.end(), v.text) != in.vars.end())
                parse_fail(v, "duplicate variable '" + v.text + "'");
            in.vars.push_back(v.text);
        }
        if (in.vars.empty()) parse_fail(peek(), "expected at least one variable");
        expect_punct(";");

        while (peek().kind != Token::eof) statement(in);
        if (!in.w && in.relations.empty() && in.automorphisms.empty())
            parse_fail(peek(), "expected at least one statement");
        return in;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::optional<Field> force_field_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

    void expect_punct(const std::string& p) {
        if (peek().kind != Token::punct || peek().text != p)
            parse_fail(peek(), "expected '" + p + "'");
        next();
    }

    long long expect_integer(const std::string& what) {
        if (peek().kind != Token::integer) parse_fail(peek(), "expected " + what);
        const Token& t = next();
        try {
            return std::stoll(t.text);
        } catch (const std::exception&) {
            parse_fail(t, "malformed coefficient");
        }
    }

    void statement(ParsedInput& in) {
        if (peek().kind != Token::ident) parse_fail(peek(), "expected a statement");
        Token head = next();
        if (head.text == "w") {
            expect_punct("=");
            Tensor t = expression(in);
            expect_punct(";");
            if (in.w) parse_fail(head, "duplicate potential statement");
            in.w = std::move(t);
        } else if (head.text == "rel") {
            expect_punct("=");
            Tensor t = expression(in);
            expect_punct(";");
            in.relations.push_back(std::move(t));
        } else if (head.text == "aut") {
            if (peek().kind != Token::ident) parse_fail(peek(), "expected an automorphism name");
            Token name = next();
            for (const auto& [existing, m] : in.automorphisms)
                if (existing == name.text)
                    parse_fail(name, "duplicate automorphism '" + name.text + "'");
            expect_punct("=");
            Matrix m = matrix_literal(in);
            expect_punct(";");
            in.automorphisms.emplace_back(name.text, std::move(m));
        } else {
            parse_fail(head, "expected 'w', 'rel', or 'aut'");
        }
    }

    Scalar coefficient(const ParsedInput& in, bool negative) {
        const Token& at = peek();
        long long num = expect_integer("a coefficient");
        long long den = 1;
        if (peek().kind == Token::punct && peek().text == "/") {
            next();
            den = expect_integer("a denominator");
        }
        if (den == 0) parse_fail(at, "malformed coefficient: zero denominator");
        try {
            return in.field.of(negative ? -num : num, den);
        } catch (const Error& e) {
            parse_fail(at, e.what());
        }
    }

    std::size_t variable(const ParsedInput& in) {
        if (peek().kind != Token::ident) parse_fail(peek(), "expected a variable");
        const Token& t = next();
        auto it = std::find(in.vars.begin(), in.vars.end(), t.text);
        if (it == in.vars.end()) parse_fail(t, "unknown variable '" + t.text + "'");
        return static_cast<std::size_t>(it - in.vars.begin());
    }

    /// term := coeff ("*"? monomial)? is rejected without the monomial; a
    /// bare coefficient cannot contribute to a homogeneous tensor.
    Tensor expression(const ParsedInput& in) {
        std::optional<Tensor> acc;
        bool negative = false;
        if (peek().kind == Token::punct && (peek().text == "-" || peek().text == "+")) {
            negative = peek().text == "-";
            next();
        }
        for (;;) {
            Token start = peek();
            Scalar c = in.field.one();
            if (peek().kind == Token::integer) {
                c = coefficient(in, negative);
                if (peek().kind == Token::punct && peek().text == "*") next();
            } else if (negative) {
                c = -c;
            }
            if (peek().kind != Token::ident) parse_fail(peek(), "expected a monomial");
            std::vector<std::size_t> word;
            word.push_back(variable(in));
            while (peek().kind == Token::punct && peek().text == "*") {
                next();
                word.push_back(variable(in));
            }
            if (!acc) {
                acc = Tensor(in.vars.size(), word.size(), in.field);
            } else if (word.size() != acc->power()) {
                parse_fail(start, "inconsistent monomial length");
            }
            acc->coeff(word) += c;

            if (peek().kind == Token::punct && (peek().text == "+" || peek().text == "-")) {
                negative = peek().text == "-";
                next();
                continue;
            }
            break;
        }
        return *acc;
    }

    Matrix matrix_literal(const ParsedInput& in) {
        expect_punct("[");
        std::vector<std::vector<Scalar>> rows;
        for (;;) {
            expect_punct("[");
            std::vector<Scalar> row;
            for (;;) {
                bool neg = false;
                if (peek().kind == Token::punct && (peek().text == "-" || peek().text == "+")) {
                    neg = peek().text == "-";
                    next();
                }
                row.push_back(coefficient(in, neg));
                if (peek().kind == Token::punct && peek().text == ",") {
                    next();
                    continue;
                }
                break;
            }
            expect_punct("]");
            if (!rows.empty() && row.size() != rows.front().size())
                parse_fail(peek(), "matrix rows have unequal lengths");
            rows.push_back(std::move(row));
            if (peek().kind == Token::punct && peek().text == ",") {
                next();
                continue;
            }
            break;
        }
        expect_punct("]");
        if (rows.size() != in.vars.size() || rows.front().size() != in.vars.size())
            parse_fail(peek(), "automorphism matrix must be square of size " +
                                   std::to_string(in.vars.size()));
        Matrix m(rows.size(), rows.size(), in.field);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
        return m;
    }
};

}  // namespace

ParsedInput parse_input(const std::string& text, const std::optional<Field>& force_field) {
    return Parser(tokenize(text), force_field).run();
}

std::string render_scalar(const Scalar& s) { return s.str(); }

namespace {

/// True when s renders with a leading minus sign.
bool renders_negative(const Scalar& s) {
    return !s.str().empty() && s.str()[0] == '-';
}

}  // namespace

std::string render_tensor(const Tensor& t, const std::vector<std::string>& vars) {
    if (vars.size() != t.dim()) fail("variable list does not match the tensor space");
    std::string out;
    for (std::uint64_t flat = 0; flat < t.size(); ++flat) {
        const Scalar& c = t.coeff(flat);
        if (c.is_zero()) continue;
        bool neg = renders_negative(c);
        Scalar mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.str() + "*";
        auto word = t.unflatten(flat);
        for (std::size_t k = 0; k < word.size(); ++k) {
            if (k) out += "*";
            out += vars[word[k]];
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_matrix(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += m.at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace spalg
