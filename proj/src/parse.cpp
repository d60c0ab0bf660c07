#include "rep/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace rep {
namespace {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind = End;
    std::string text;
    int line = 0, column = 0;
};

// Lexer over one logical line; understands identifiers, rational literals
// and the operator symbols of the polynomial grammar.
class Lexer {
  public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    bool at_end() const { return current_.kind == Token::End; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(line_, current_.column,
                         "expected " + expected +
                             (current_.kind == Token::End ? " but reached end of line"
                                                          : " but found '" + current_.text + "'"));
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = Token{Token::End, "", line_, static_cast<int>(pos_) + 1};
        if (pos_ >= text_.size() || text_[pos_] == '#') {
            current_.kind = Token::End;
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\''))
                ++pos_;
            current_.kind = Token::Ident;
            current_.text = text_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            current_.kind = Token::Number;
            current_.text = text_.substr(start, pos_ - start);
        } else {
            current_.kind = Token::Symbol;
            current_.text = std::string(1, c);
            ++pos_;
        }
    }

    const std::string& text_;
    int line_;
    size_t pos_ = 0;
    Token current_;
};

class PolynomialParser {
  public:
    PolynomialParser(Lexer& lex, const std::map<std::string, int>& generators)
        : lex_(lex), generators_(generators) {}

    NCPolynomial parse() {
        NCPolynomial p = parse_expr();
        if (!lex_.at_end()) lex_.fail("'+', '-' or end of polynomial");
        return p;
    }

  private:
    NCPolynomial parse_expr() {
        NCPolynomial acc;
        bool negate = consume_sign();
        acc = parse_term();
        if (negate) acc = -acc;
        while (is_symbol("+") || is_symbol("-")) {
            const bool minus = lex_.take().text == "-";
            NCPolynomial t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    NCPolynomial parse_term() {
        NCPolynomial acc = parse_factor();
        while (is_symbol("*")) {
            lex_.take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    NCPolynomial parse_factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Number) {
            return NCPolynomial::constant(rat_from_string(lex_.take().text));
        }
        if (t.kind == Token::Ident) {
            const Token id = lex_.take();
            auto it = generators_.find(id.text);
            if (it == generators_.end())
                throw ParseError(id.line, id.column, "unknown identifier '" + id.text + "'");
            int power = 1;
            if (is_symbol("^")) {
                lex_.take();
                if (lex_.peek().kind != Token::Number) lex_.fail("a positive integer exponent");
                const Token exp = lex_.take();
                if (exp.text.find('/') != std::string::npos)
                    throw ParseError(exp.line, exp.column, "exponent must be a positive integer");
                power = std::stoi(exp.text);
                if (power < 1) throw ParseError(exp.line, exp.column, "exponent must be >= 1");
            }
            return NCPolynomial::monomial(Word(std::vector<int>(power, it->second)), Rat(1));
        }
        if (is_symbol("(")) {
            lex_.take();
            NCPolynomial inner = parse_expr();
            if (!is_symbol(")")) lex_.fail("')'");
            lex_.take();
            return inner;
        }
        lex_.fail("a coefficient, a generator name or '('");
    }

    bool consume_sign() {
        bool negate = false;
        while (is_symbol("+") || is_symbol("-")) {
            if (lex_.take().text == "-") negate = !negate;
        }
        return negate;
    }

    bool is_symbol(const char* s) const {
        return lex_.peek().kind == Token::Symbol && lex_.peek().text == s;
    }

    Lexer& lex_;
    const std::map<std::string, int>& generators_;
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    lines.push_back(current);
    return lines;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    AlgebraFile out;
    size_t i = 0;
    auto skip_blank = [&] {
        while (i < lines.size() && blank_or_comment(lines[i])) ++i;
    };
    skip_blank();
    if (i >= lines.size()) throw ParseError(1, 1, "empty algebra file");

    {
        Lexer lex(lines[i], static_cast<int>(i) + 1);
        if (lex.peek().kind == Token::Ident && lex.peek().text == "algebra") {
            lex.take();
            if (lex.peek().kind != Token::Ident) lex.fail("an algebra name");
            out.name = lex.take().text;
            if (!lex.at_end()) lex.fail("end of line");
            ++i;
            skip_blank();
        }
    }
    if (i >= lines.size())
        throw ParseError(static_cast<int>(lines.size()), 1, "generators section missing");
    std::map<std::string, int> generator_index;
    {
        Lexer lex(lines[i], static_cast<int>(i) + 1);
        if (!(lex.peek().kind == Token::Ident && lex.peek().text == "generators"))
            lex.fail("'generators'");
        lex.take();
        while (lex.peek().kind == Token::Ident) {
            const Token name = lex.take();
            if (generator_index.count(name.text))
                throw ParseError(name.line, name.column,
                                 "duplicate generator name '" + name.text + "'");
            generator_index[name.text] = static_cast<int>(out.presentation.generator_names.size());
            out.presentation.generator_names.push_back(name.text);
        }
        if (!lex.at_end()) lex.fail("a generator name");
        if (out.presentation.generator_names.empty()) lex.fail("at least one generator name");
        ++i;
        skip_blank();
    }
    if (i < lines.size()) {
        Lexer lex(lines[i], static_cast<int>(i) + 1);
        if (!(lex.peek().kind == Token::Ident && lex.peek().text == "relations"))
            lex.fail("'relations' or end of file");
        lex.take();
        if (!lex.at_end()) lex.fail("end of line");
        ++i;
        bool closed = false;
        for (; i < lines.size(); ++i) {
            if (blank_or_comment(lines[i])) continue;
            Lexer rel_lex(lines[i], static_cast<int>(i) + 1);
            if (rel_lex.peek().kind == Token::Ident && rel_lex.peek().text == "end") {
                rel_lex.take();
                if (!rel_lex.at_end()) rel_lex.fail("end of line");
                closed = true;
                ++i;
                break;
            }
            PolynomialParser parser(rel_lex, generator_index);
            out.presentation.relations.push_back(parser.parse());
        }
        if (!closed)
            throw ParseError(static_cast<int>(lines.size()), 1, "'end' of relations section missing");
        skip_blank();
        if (i < lines.size()) {
            Lexer extra(lines[i], static_cast<int>(i) + 1);
            extra.fail("end of file");
        }
    }
    out.presentation.validate();
    return out;
}

std::string nc_polynomial_to_string(const NCPolynomial& f,
                                    const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        Rat coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        std::vector<std::string> factors;
        if (coeff != 1 || w.is_one()) factors.push_back(rat_to_string(coeff));
        size_t pos = 0;
        while (pos < w.letters.size()) {
            size_t run = pos;
            while (run < w.letters.size() && w.letters[run] == w.letters[pos]) ++run;
            const size_t count = run - pos;
            std::string factor = names[w.letters[pos]];
            if (count > 1) factor += "^" + std::to_string(count);
            factors.push_back(std::move(factor));
            pos = run;
        }
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

std::string print_algebra(const AlgebraFile& alg) {
    std::ostringstream os;
    if (!alg.name.empty()) os << "algebra " << alg.name << "\n";
    os << "generators";
    for (const auto& name : alg.presentation.generator_names) os << " " << name;
    os << "\n";
    if (!alg.presentation.relations.empty()) {
        os << "relations\n";
        for (const auto& rel : alg.presentation.relations)
            os << "  " << nc_polynomial_to_string(rel, alg.presentation.generator_names) << "\n";
        os << "end\n";
    }
    return os.str();
}

namespace {

std::vector<Token> tokenize_all(const std::string& text) {
    std::vector<Token> tokens;
    const std::vector<std::string> lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        Lexer lex(lines[i], static_cast<int>(i) + 1);
        while (!lex.at_end()) tokens.push_back(lex.take());
    }
    return tokens;
}

Rat rational_token(const std::vector<Token>& tokens, size_t& pos) {
    if (pos >= tokens.size())
        throw ParseError(tokens.empty() ? 1 : tokens.back().line, 1, "unexpected end of file");
    const Token& t = tokens[pos];
    if (t.kind == Token::Symbol && t.text == "-") {
        ++pos;
        return -rational_token(tokens, pos);
    }
    if (t.kind != Token::Number)
        throw ParseError(t.line, t.column, "expected a rational number, found '" + t.text + "'");
    ++pos;
    return rat_from_string(t.text);
}

}  // namespace

RepPoint parse_point(const std::string& text, int num_generators) {
    const std::vector<Token> tokens = tokenize_all(text);
    size_t pos = 0;
    if (tokens.empty()) throw ParseError(1, 1, "empty point file");
    if (tokens[0].kind != Token::Number)
        throw ParseError(tokens[0].line, tokens[0].column, "expected the dimension n");
    const int n = std::stoi(tokens[pos++].text);
    if (n < 1) throw ParseError(tokens[0].line, tokens[0].column, "dimension n must be >= 1");
    RepPoint p;
    p.n = n;
    for (int l = 0; l < num_generators; ++l) {
        RationalMatrix x(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x(i, j) = rational_token(tokens, pos);
        p.matrices.push_back(std::move(x));
    }
    if (pos != tokens.size())
        throw ParseError(tokens[pos].line, tokens[pos].column, "trailing data in point file");
    return p;
}

std::vector<Rat> parse_vector(const std::string& text) {
    const std::vector<Token> tokens = tokenize_all(text);
    std::vector<Rat> out;
    size_t pos = 0;
    while (pos < tokens.size()) out.push_back(rational_token(tokens, pos));
    if (out.empty()) throw ParseError(1, 1, "empty vector file");
    return out;
}

std::string print_point(const RepPoint& p) {
    std::ostringstream os;
    os << p.n << "\n";
    for (const auto& x : p.matrices) {
        os << "\n";
        for (int i = 0; i < p.n; ++i) {
            for (int j = 0; j < p.n; ++j) {
                if (j) os << " ";
                os << rat_to_string(x(i, j));
            }
            os << "\n";
        }
    }
    return os.str();
}

namespace {

Word parse_word(Lexer& lex, const std::map<std::string, int>& generators) {
    if (lex.peek().kind == Token::Number && lex.peek().text == "1") {
        lex.take();
        return Word::one();
    }
    std::vector<int> letters;
    while (true) {
        if (lex.peek().kind != Token::Ident) lex.fail("a generator name or '1'");
        const Token id = lex.take();
        auto it = generators.find(id.text);
        if (it == generators.end())
            throw ParseError(id.line, id.column, "unknown generator '" + id.text + "'");
        letters.push_back(it->second);
        if (lex.peek().kind == Token::Symbol && lex.peek().text == "*")
            lex.take();
        else
            break;
    }
    return Word(std::move(letters));
}

BimoduleElement parse_bimodule_sum(Lexer& lex, const std::map<std::string, int>& generators) {
    BimoduleElement out;
    if (lex.peek().kind == Token::Number && lex.peek().text == "0") {
        lex.take();
        if (!lex.at_end()) lex.fail("end of entry");
        return out;
    }
    while (true) {
        Rat sign(1);
        while (lex.peek().kind == Token::Symbol &&
               (lex.peek().text == "+" || lex.peek().text == "-")) {
            if (lex.take().text == "-") sign = -sign;
        }
        Rat coeff(1);
        if (lex.peek().kind == Token::Number) coeff = rat_from_string(lex.take().text);
        if (!(lex.peek().kind == Token::Symbol && lex.peek().text == "(")) lex.fail("'('");
        lex.take();
        Word left = parse_word(lex, generators);
        if (!(lex.peek().kind == Token::Symbol && lex.peek().text == "|")) lex.fail("'|'");
        lex.take();
        Word right = parse_word(lex, generators);
        if (!(lex.peek().kind == Token::Symbol && lex.peek().text == ")")) lex.fail("')'");
        lex.take();
        out.add(left, right, sign * coeff);
        if (lex.at_end()) break;
        if (!(lex.peek().kind == Token::Symbol &&
              (lex.peek().text == "+" || lex.peek().text == "-")))
            lex.fail("'+', '-' or end of entry");
    }
    return out;
}

}  // namespace

ResolutionStep parse_resolution(const std::string& text, const Presentation& pres) {
    std::map<std::string, int> generator_index;
    for (int l = 0; l < pres.num_generators(); ++l)
        generator_index[pres.generator_names[l]] = l;
    const std::vector<std::string> lines = split_lines(text);
    ResolutionStep step;
    bool header_seen = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (blank_or_comment(lines[i])) continue;
        Lexer lex(lines[i], static_cast<int>(i) + 1);
        if (!header_seen) {
            if (!(lex.peek().kind == Token::Ident && lex.peek().text == "rows")) lex.fail("'rows'");
            lex.take();
            if (lex.peek().kind != Token::Number) lex.fail("a row count");
            step.rows = std::stoi(lex.take().text);
            if (!(lex.peek().kind == Token::Ident && lex.peek().text == "cols")) lex.fail("'cols'");
            lex.take();
            if (lex.peek().kind != Token::Number) lex.fail("a column count");
            step.cols = std::stoi(lex.take().text);
            if (!lex.at_end()) lex.fail("end of line");
            if (step.rows < 1 || step.cols < 1)
                throw ParseError(static_cast<int>(i) + 1, 1, "rows and cols must be >= 1");
            if (step.cols != pres.num_relations())
                throw ParseError(static_cast<int>(i) + 1, 1,
                                 "cols must equal the number of relations (" +
                                     std::to_string(pres.num_relations()) + ")");
            step.entries.assign(static_cast<size_t>(step.rows) * step.cols, BimoduleElement{});
            header_seen = true;
            continue;
        }
        if (!(lex.peek().kind == Token::Ident && lex.peek().text == "entry")) lex.fail("'entry'");
        lex.take();
        if (lex.peek().kind != Token::Number) lex.fail("a row index");
        const int row = std::stoi(lex.take().text);
        if (lex.peek().kind != Token::Number) lex.fail("a column index");
        const int col = std::stoi(lex.take().text);
        if (row < 0 || row >= step.rows || col < 0 || col >= step.cols)
            throw ParseError(static_cast<int>(i) + 1, 1, "entry index out of range");
        if (!(lex.peek().kind == Token::Symbol && lex.peek().text == "=")) lex.fail("'='");
        lex.take();
        step.entries[static_cast<size_t>(row) * step.cols + col] =
            parse_bimodule_sum(lex, generator_index);
    }
    if (!header_seen) throw ParseError(1, 1, "resolution file missing 'rows ... cols ...' header");
    return step;
}

std::vector<std::pair<std::string, std::string>> parse_family(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    const std::vector<std::string> lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        if (blank_or_comment(lines[i])) continue;
        const size_t colon = lines[i].find(':');
        if (colon == std::string::npos)
            throw ParseError(static_cast<int>(i) + 1, 1, "expected 'label: point-file'");
        std::string label = lines[i].substr(0, colon);
        std::string path = lines[i].substr(colon + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        trim(label);
        trim(path);
        if (label.empty() || path.empty())
            throw ParseError(static_cast<int>(i) + 1, 1, "empty label or path");
        out.emplace_back(std::move(label), std::move(path));
    }
    return out;
}

std::string comm_polynomial_to_string(const CommPolynomial& f,
                                      const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : f.terms()) {
        Rat coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        os << rat_to_string(coeff);
        for (const auto& [v, e] : mono) {
            os << " * xi[" << names[v.l] << "," << v.i << "," << v.j << "]";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace rep
