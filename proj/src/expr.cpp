#include "heisvoa/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace heisvoa {

namespace {

class Parser {
public:
    Parser(const std::string& text, const BosonAlgebra& algebra)
        : text_(text), alg_(algebra) {}

    State parse() {
        skip_ws();
        if (peek() == '0' && at_end(pos_ + 1)) {
            ++pos_;
            return State{};
        }
        bool negate = accept('-');
        State out = parse_term(negate);
        skip_ws();
        while (!at_end(pos_)) {
            if (accept('+'))
                out += parse_term(false);
            else if (accept('-'))
                out += parse_term(true);
            else
                fail("expected '+' or '-'");
            skip_ws();
        }
        return out;
    }

private:
    State parse_term(bool negate) {
        skip_ws();
        Rational coeff = negate ? -1 : 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_rational_token();
            skip_ws();
            if (!accept('*'))
                fail("expected '*' after coefficient");
        }
        std::vector<Factor> factors;
        for (;;) {
            skip_ws();
            if (peek() == 'h') {
                factors.push_back(parse_atom());
                skip_ws();
                accept('*'); // optional separator between atoms
            } else {
                break;
            }
        }
        skip_ws();
        expect_vacuum();
        return State(Monomial(std::move(factors)), coeff);
    }

    Factor parse_atom() {
        std::size_t start = pos_;
        ++pos_; // 'h'
        long boson = parse_uint("boson index");
        if (boson < 1 || boson > alg_.rank())
            throw ParseError("boson index " + std::to_string(boson) + " exceeds rank " +
                                 std::to_string(alg_.rank()),
                             start);
        if (!accept('('))
            fail("expected '(' in creation atom");
        if (!accept('-'))
            fail("creation atoms need a negative mode, e.g. h1(-2)");
        long level = parse_uint("level");
        if (level < 1)
            throw ParseError("level must be >= 1", start);
        if (!accept(')'))
            fail("expected ')' in creation atom");
        return {static_cast<int>(boson), static_cast<int>(level)};
    }

    void expect_vacuum() {
        if (accept('|') && accept('0') && accept('>'))
            return;
        fail("expected vacuum token '|0>'");
    }

    Rational parse_rational_token() {
        std::size_t start = pos_;
        std::string digits = read_digits("rational");
        if (accept('/')) {
            std::string den = read_digits("denominator");
            try {
                return parse_rational(digits + "/" + den);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start);
            }
        }
        return Rational(Integer(digits));
    }

    long parse_uint(const char* what) {
        return std::stol(read_digits(what));
    }

    std::string read_digits(const char* what) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail(std::string("expected ") + what);
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_end(std::size_t from) const {
        for (std::size_t i = from; i < text_.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text_[i])))
                return false;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    const BosonAlgebra& alg_;
    std::size_t pos_ = 0;
};

} // namespace

State parse_state(const std::string& text, const BosonAlgebra& algebra) {
    return Parser(text, algebra).parse();
}

std::string format_monomial(const Monomial& m) {
    std::string out;
    for (const auto& f : m.factors())
        out += "h" + std::to_string(f.boson) + "(-" + std::to_string(f.level) + ")";
    out += "|0>";
    return out;
}

std::string format_state(const State& s) {
    if (s.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : s.terms()) {
        Rational c = coeff;
        if (first) {
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        if (c != 1)
            out += format_rational(c) + "*";
        out += format_monomial(mono);
    }
    return out;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

BosonAlgebra parse_algebra_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int rank = -1;
    std::string gram_text;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("algebra file: expected 'key = value' in '" + line + "'");
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key == "rank")
            rank = std::stoi(value);
        else if (key == "gram") {
            gram_text = value;
            // a bracketed value may continue over several lines
            auto balance = [](const std::string& s) {
                long d = 0;
                for (char ch : s)
                    d += (ch == '[') - (ch == ']');
                return d;
            };
            while (balance(gram_text) > 0 && std::getline(in, line)) {
                auto h = line.find('#');
                if (h != std::string::npos)
                    line = line.substr(0, h);
                gram_text += " " + strip(line);
            }
        } else
            throw std::invalid_argument("algebra file: unknown key '" + key + "'");
    }
    if (rank < 1)
        throw std::invalid_argument("algebra file: missing or invalid rank");
    if (gram_text.empty())
        return make_identity_algebra(rank);

    // gram = [[p/q, ...], ...]
    RatMatrix gram;
    RatVector row;
    std::string token;
    int depth = 0;
    auto flush_token = [&] {
        token = strip(token);
        if (!token.empty()) {
            row.push_back(parse_rational(token));
            token.clear();
        }
    };
    for (char ch : gram_text) {
        if (ch == '[') {
            ++depth;
            if (depth == 2)
                row.clear();
        } else if (ch == ']') {
            flush_token();
            if (depth == 2)
                gram.push_back(row);
            --depth;
        } else if (ch == ',') {
            if (depth == 2)
                flush_token();
        } else {
            token += ch;
        }
    }
    if (depth != 0)
        throw std::invalid_argument("algebra file: unbalanced brackets in gram");
    return make_algebra(rank, gram);
}

BosonAlgebra parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str());
}

} // namespace heisvoa
