#include <fstream>
#include <set>
#include <sstream>

#include "cyclewright/digraph.hpp"

namespace cw {

namespace {

bool skip_line(const std::string& line) {
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    std::set<Arc> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n) || tag != "n" || n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'n <N>' header");
        } else {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected '<u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
            if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop");
            if (!seen.insert({u, v}).second) throw ParseError("line " + std::to_string(lineno) + ": duplicate arc");
            arcs.emplace_back(u, v);
        }
        std::string extra;
        if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0) throw ParseError("missing 'n <N>' header");
    return Digraph(n, std::move(arcs));
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return parse_digraph(f);
}

std::string format_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "n " << d.order() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

void write_digraph_file(const Digraph& d, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << format_digraph(d);
}

}  // namespace cw
