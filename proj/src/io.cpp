#include "fgq/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace fgq {

namespace {

struct Token {
    std::string text;
    int line, col;  // 1-based
};

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] == '#') continue;  // comment line
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back(
                {line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
        }
    }
    return tokens;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (done()) throw parse_error(last_line(), 1, "unexpected end of input");
        return tokens_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }

    int next_int(const std::string& what) {
        const Token t = next();
        try {
            std::size_t used = 0;
            const int v = std::stoi(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw parse_error(t.line, t.col, "expected " + what + ", got '" + t.text + "'");
        }
    }

    int next_int_in(int lo, int hi, const std::string& what) {
        const Token t = peek();
        const int v = next_int(what);
        if (v < lo || v >= hi)
            throw parse_error(t.line, t.col, what + " " + std::to_string(v) + " outside [" +
                                                 std::to_string(lo) + ", " + std::to_string(hi) +
                                                 ")");
        return v;
    }

    void expect_keyword(const std::string& kw) {
        const Token t = next();
        if (t.text != kw)
            throw parse_error(t.line, t.col, "expected '" + kw + "', got '" + t.text + "'");
    }

    void expect_end() {
        if (!done()) {
            const Token& t = peek();
            throw parse_error(t.line, t.col, "trailing input '" + t.text + "'");
        }
    }

    int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

CayleyTable read_table_body(Cursor& cur) {
    const Token head = cur.peek();
    const int n = cur.next_int("table order");
    if (n < 1) throw parse_error(head.line, head.col, "table order must be positive");
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) cells.push_back(cur.next_int_in(0, n, "table entry"));
    return CayleyTable(n, std::move(cells));
}

std::vector<int> read_images(Cursor& cur, int n) {
    std::vector<int> img;
    img.reserve(n);
    for (int i = 0; i < n; ++i) img.push_back(cur.next_int_in(0, n, "image"));
    return img;
}

std::string table_body_text(const CayleyTable& t) {
    std::ostringstream out;
    out << t.order() << '\n';
    for (int x = 0; x < t.order(); ++x) {
        for (int y = 0; y < t.order(); ++y) {
            if (y) out << ' ';
            out << t.at(x, y);
        }
        out << '\n';
    }
    return out.str();
}

std::string images_text(const std::vector<int>& img) {
    std::ostringstream out;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (i) out << ' ';
        out << img[i];
    }
    out << '\n';
    return out.str();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

TableDoc parse_table(std::istream& in) {
    Cursor cur(tokenize(in));
    TableDoc doc;
    doc.table = read_table_body(cur);
    if (!cur.done() && cur.peek().text == "point") {
        cur.expect_keyword("point");
        doc.point = cur.next_int_in(0, doc.table.order(), "point");
    }
    cur.expect_end();
    return doc;
}

TableDoc parse_table_text(const std::string& text) {
    std::istringstream in(text);
    return parse_table(in);
}

TableDoc load_table(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_table(in);
}

std::string print_table(const TableDoc& doc) {
    std::string out = table_body_text(doc.table);
    if (doc.point) out += "point " + std::to_string(*doc.point) + "\n";
    return out;
}

ArithmeticForm parse_form(std::istream& in) {
    Cursor cur(tokenize(in));
    cur.expect_keyword("group:");
    const CayleyTable raw = read_table_body(cur);
    const int n = raw.order();
    cur.expect_keyword("f:");
    std::vector<int> fimg = read_images(cur, n);
    cur.expect_keyword("g:");
    std::vector<int> gimg = read_images(cur, n);
    cur.expect_keyword("e:");
    const int e = cur.next_int_in(0, n, "e");
    cur.expect_end();

    const GroupTable g = GroupTable::require(raw);  // not_group_error on bad tables
    if (!Permutation::is_bijection(fimg) || !Permutation::is_bijection(gimg))
        throw invalid_form_error("form file: f and g must be bijections");
    ArithmeticForm form{g, Permutation(std::move(fimg)), Permutation(std::move(gimg)), e};
    if (auto defect = form_defect(form, form.induced()))
        throw invalid_form_error("form file: " + *defect);
    return form;
}

ArithmeticForm parse_form_text(const std::string& text) {
    std::istringstream in(text);
    return parse_form(in);
}

ArithmeticForm load_form(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_form(in);
}

std::string print_form(const ArithmeticForm& form) {
    std::string out;
    out += "group:\n";
    out += table_body_text(form.group.table());
    out += "f:\n";
    out += images_text(form.f.img);
    out += "g:\n";
    out += images_text(form.g.img);
    out += "e:\n";
    out += std::to_string(form.e) + "\n";
    return out;
}

PointedModule parse_module(std::istream& in) {
    Cursor cur(tokenize(in));
    cur.expect_keyword("group:");
    const CayleyTable raw = read_table_body(cur);
    const int n = raw.order();
    PointedModule pm;
    cur.expect_keyword("phi:");
    pm.module.phi = ElementMap(read_images(cur, n));
    cur.expect_keyword("psi:");
    pm.module.psi = ElementMap(read_images(cur, n));
    cur.expect_keyword("mu:");
    pm.module.mu = ElementMap(read_images(cur, n));
    cur.expect_keyword("nu:");
    pm.module.nu = ElementMap(read_images(cur, n));
    cur.expect_keyword("e:");
    pm.e = cur.next_int_in(0, n, "e");
    cur.expect_end();

    pm.module.group = GroupTable::require(raw);
    if (auto defect = check_module(pm.module))
        throw invalid_module_error("module file: " + *defect);
    return pm;
}

PointedModule parse_module_text(const std::string& text) {
    std::istringstream in(text);
    return parse_module(in);
}

PointedModule load_module(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_module(in);
}

std::string print_module(const PointedModule& pm) {
    std::string out;
    out += "group:\n";
    out += table_body_text(pm.module.group.table());
    out += "phi:\n";
    out += images_text(pm.module.phi.img);
    out += "psi:\n";
    out += images_text(pm.module.psi.img);
    out += "mu:\n";
    out += images_text(pm.module.mu.img);
    out += "nu:\n";
    out += images_text(pm.module.nu.img);
    out += "e:\n";
    out += std::to_string(pm.e) + "\n";
    return out;
}

}  // namespace fgq
