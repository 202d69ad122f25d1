#include "onto/sexpr.hpp"

#include <sstream>

namespace onto {

namespace {

bool symbol_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool symbol_char(char c) {
    return symbol_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<Form> read_program() {
        std::vector<Form> forms;
        skip_blank();
        while (!at_end()) {
            forms.push_back(read_form());
            skip_blank();
        }
        return forms;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    SourceLoc here() const { return SourceLoc{line_, column_}; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_blank() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == ';') {
                while (!at_end() && peek() != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    Form read_form() {
        SourceLoc loc = here();
        char c = peek();
        if (c == '(')
            return read_sequence(Form::Kind::List, ')', loc);
        if (c == '[')
            return read_sequence(Form::Kind::Vector, ']', loc);
        if (c == ')' || c == ']')
            throw Error(ErrorCode::UnbalancedDelimiter, loc,
                        std::string("unexpected '") + c + "'");
        if (c == '"')
            return read_string(loc);
        if (c == ':')
            return read_keyword(loc);
        if (symbol_start(c))
            return read_symbol(loc);
        throw Error(ErrorCode::IllegalToken, loc,
                    std::string("illegal character '") + c + "'");
    }

    Form read_sequence(Form::Kind kind, char closer, SourceLoc loc) {
        advance(); // opener
        Form form;
        form.kind = kind;
        form.loc = loc;
        while (true) {
            skip_blank();
            if (at_end())
                throw Error(ErrorCode::UnbalancedDelimiter, loc,
                            std::string("expected '") + closer +
                                "' before end of input");
            char c = peek();
            if (c == closer) {
                advance();
                return form;
            }
            if (c == ')' || c == ']')
                throw Error(ErrorCode::UnbalancedDelimiter, here(),
                            std::string("expected '") + closer +
                                "' but found '" + c + "'");
            form.items.push_back(read_form());
        }
    }

    Form read_string(SourceLoc loc) {
        advance(); // opening quote
        Form form;
        form.kind = Form::Kind::String;
        form.loc = loc;
        while (true) {
            if (at_end())
                throw Error(ErrorCode::UnterminatedString, loc,
                            "unterminated string");
            char c = advance();
            if (c == '"')
                return form;
            form.text += c;
        }
    }

    Form read_keyword(SourceLoc loc) {
        advance(); // ':'
        if (at_end() || !symbol_start(peek()))
            throw Error(ErrorCode::IllegalToken, loc,
                        "':' must be followed by a name");
        Form form = read_symbol(here());
        form.kind = Form::Kind::Keyword;
        form.loc = loc;
        return form;
    }

    Form read_symbol(SourceLoc loc) {
        Form form;
        form.kind = Form::Kind::Symbol;
        form.loc = loc;
        form.text += advance();
        while (!at_end() && symbol_char(peek()))
            form.text += advance();
        return form;
    }
};

void print_into(std::ostringstream& out, const Form& form) {
    switch (form.kind) {
    case Form::Kind::List:
    case Form::Kind::Vector: {
        out << (form.kind == Form::Kind::List ? '(' : '[');
        for (size_t i = 0; i < form.items.size(); ++i) {
            if (i)
                out << ' ';
            print_into(out, form.items[i]);
        }
        out << (form.kind == Form::Kind::List ? ')' : ']');
        break;
    }
    case Form::Kind::Symbol:
        out << form.text;
        break;
    case Form::Kind::Keyword:
        out << ':' << form.text;
        break;
    case Form::Kind::String:
        out << '"' << form.text << '"';
        break;
    }
}

} // namespace

std::vector<Form> parse(std::string_view text) {
    return Reader(text).read_program();
}

std::string print_form(const Form& form) {
    std::ostringstream out;
    print_into(out, form);
    return out.str();
}

std::string print_program(std::span<const Form> forms) {
    std::ostringstream out;
    for (size_t i = 0; i < forms.size(); ++i) {
        if (i)
            out << '\n';
        print_into(out, forms[i]);
    }
    if (!forms.empty())
        out << '\n';
    return out.str();
}

} // namespace onto
