#include "sptough/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "sptough/errors.hpp"

namespace sptough {

namespace {

struct cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void advance() {
        if (done()) return;
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line, column);
    }
};

int parse_expr(cursor& cur, sp_tree& t) {
    cur.skip_ws();
    char c = cur.peek();
    if (c == 'e') {
        cur.advance();
        return t.add_leaf();
    }
    if (c != 'S' && c != 'P') {
        if (cur.done()) cur.fail("expected expression, found end of input");
        cur.fail(std::string("expected 'e', 'S' or 'P', found '") + c + "'");
    }
    node_kind kind = c == 'S' ? node_kind::series : node_kind::parallel;
    cur.advance();
    cur.skip_ws();
    if (cur.peek() != '(') cur.fail("expected '('");
    cur.advance();
    std::vector<int> children;
    children.push_back(parse_expr(cur, t));
    cur.skip_ws();
    while (cur.peek() == ',') {
        cur.advance();
        children.push_back(parse_expr(cur, t));
        cur.skip_ws();
    }
    if (cur.peek() != ')') {
        if (cur.done()) cur.fail("expected ')' or ',', found end of input");
        cur.fail(std::string("expected ')' or ',', found '") + cur.peek() + "'");
    }
    if (children.size() < 2)
        cur.fail(std::string(kind == node_kind::series ? "series" : "parallel") +
                 " node needs at least two children");
    cur.advance();
    return t.add_node(kind, std::move(children));
}

}  // namespace

sp_tree parse(const std::string& text) {
    cursor cur{text};
    sp_tree t;
    t.root = parse_expr(cur, t);
    cur.skip_ws();
    if (!cur.done()) cur.fail("unexpected trailing input");
    validate(t);
    return t;
}

namespace {

void serialize_rec(const sp_tree& t, int id, std::string& out) {
    const tree_node& n = t.node(id);
    if (n.kind == node_kind::leaf) {
        out += 'e';
        return;
    }
    out += n.kind == node_kind::series ? 'S' : 'P';
    out += '(';
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ',';
        serialize_rec(t, n.children[i], out);
    }
    out += ')';
}

}  // namespace

std::string serialize(const sp_tree& t) {
    validate(t);
    std::string out;
    serialize_rec(t, t.root, out);
    return out;
}

namespace {

// Reads one non-negative integer starting at the cursor, which must sit on a
// non-space character.
int read_vertex(cursor& cur) {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected a non-negative vertex id");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        value = value * 10 + (cur.peek() - '0');
        if (value > 1'000'000) cur.fail("vertex id too large");
        cur.advance();
    }
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())) &&
        cur.peek() != '#')
        cur.fail("expected a non-negative vertex id");
    return static_cast<int>(value);
}

void skip_spaces_in_line(cursor& cur) {
    while (!cur.done() && cur.peek() != '\n' &&
           std::isspace(static_cast<unsigned char>(cur.peek())))
        cur.advance();
}

void skip_comment(cursor& cur) {
    if (cur.peek() == '#')
        while (!cur.done() && cur.peek() != '\n') cur.advance();
}

}  // namespace

multigraph read_edge_list(const std::string& text) {
    multigraph g;
    cursor cur{text};
    while (!cur.done()) {
        skip_spaces_in_line(cur);
        skip_comment(cur);
        if (cur.done()) break;
        if (cur.peek() == '\n') {
            cur.advance();
            continue;
        }
        int u = read_vertex(cur);
        skip_spaces_in_line(cur);
        if (cur.done() || cur.peek() == '\n' || cur.peek() == '#')
            cur.fail("expected two vertex ids on the line");
        int v = read_vertex(cur);
        skip_spaces_in_line(cur);
        skip_comment(cur);
        if (!cur.done() && cur.peek() != '\n')
            cur.fail("unexpected trailing input on edge line");
        g.add_edge(u, v);
    }
    return g;
}

std::string to_dot(const multigraph& g, const dot_options& options) {
    std::set<int> tough(options.tough_set.begin(), options.tough_set.end());
    std::set<int> marked(options.highlight_edges.begin(), options.highlight_edges.end());
    std::ostringstream out;
    out << "graph G {\n";
    out << "    node [shape=circle, fontsize=12];\n";
    for (int v : g.vertex_ids) {
        std::vector<std::string> attrs;
        bool terminal = options.terminals &&
                        (options.terminals->first == v || options.terminals->second == v);
        if (terminal) attrs.push_back("shape=doublecircle");
        if (tough.count(v)) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=gray80");
        }
        if (attrs.empty() && g.degree(v) > 0) continue;
        out << "    " << v;
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) {
                if (i) out << ", ";
                out << attrs[i];
            }
            out << "]";
        }
        out << ";\n";
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        out << "    " << g.edges[e].first << " -- " << g.edges[e].second;
        if (marked.count(static_cast<int>(e)))
            out << " [color=red, penwidth=2.0]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sptough
