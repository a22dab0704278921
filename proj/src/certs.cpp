#include "cyclewright/certs.hpp"

#include <algorithm>
#include <json.hpp>

namespace cw {

using json = nlohmann::ordered_json;

bool verify_coloring(const Digraph& d, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != d.order())
        throw DomainMismatch("colouring covers " + std::to_string(c.color.size()) + " vertices, digraph has " +
                             std::to_string(d.order()));
    for (int x : c.color)
        if (x < 0 || x >= c.palette_size) throw DomainMismatch("colour " + std::to_string(x) + " outside palette");
    for (auto [u, v] : d.arcs())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

std::optional<std::string> subdivision_defect(const Digraph& d, const SubdivisionWitness& w) {
    try {
        w.spec.validate();
    } catch (const Error& e) {
        return std::string("invalid spec: ") + e.what();
    }
    const std::size_t m = w.spec.blocks.size();
    if (w.branch.size() != m || w.paths.size() != m) return "branch/path count differs from block count";
    const int n = d.order();
    std::vector<int> seen(n, 0);
    auto bad = [&](int v) { return v < 0 || v >= n; };
    for (int b : w.branch) {
        if (bad(b)) return "branch vertex out of range";
        if (seen[b]++) return "repeated branch vertex";
    }
    int total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = w.paths[i];
        const Block& blk = w.spec.blocks[i];
        if (p.size() < 2) return "path " + std::to_string(i) + " is empty";
        if (p.front() != w.branch[i] || p.back() != w.branch[(i + 1) % m])
            return "path " + std::to_string(i) + " does not join consecutive branch vertices";
        int len = static_cast<int>(p.size()) - 1;
        if (len < blk.length) return "path " + std::to_string(i) + " shorter than its block";
        total += len;
        for (std::size_t j = 0; j + 1 < p.size(); ++j) {
            int a = p[j], b = p[j + 1];
            if (bad(a) || bad(b)) return "path vertex out of range";
            bool ok = blk.dir == Dir::Forward ? d.has_arc(a, b) : d.has_arc(b, a);
            if (!ok) return "path " + std::to_string(i) + " misses an arc in its block direction";
        }
        for (std::size_t j = 1; j + 1 < p.size(); ++j)
            if (seen[p[j]]++) return "internal vertex " + std::to_string(p[j]) + " repeated";
    }
    if (m == 2 && total < 3) return "two-block witness reuses one arc";
    return std::nullopt;
}

bool verify_subdivision(const Digraph& d, const SubdivisionWitness& w) { return !subdivision_defect(d, w); }

bool equivalent_specs(const OrientedCycleSpec& a, const OrientedCycleSpec& b) {
    if (a.blocks.size() != b.blocks.size()) return false;
    const std::size_t m = a.blocks.size();
    auto flip = [](Dir x) { return x == Dir::Forward ? Dir::Backward : Dir::Forward; };
    for (std::size_t r = 0; r < m; ++r) {
        bool same = true, mirrored = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(a.blocks[i] == b.blocks[(i + r) % m])) same = false;
            const Block& rb = b.blocks[(r + m - i) % m];
            if (a.blocks[i].length != rb.length || a.blocks[i].dir != flip(rb.dir)) mirrored = false;
        }
        if (same || mirrored) return true;
    }
    // A dicycle read backwards is still a single forward block.
    return m == 1 && a.blocks[0].length == b.blocks[0].length;
}

Certificate Certificate::make_coloring(std::string theorem, std::map<std::string, int> params, int bound, Coloring c,
                                       std::string route) {
    Certificate r;
    r.theorem = std::move(theorem);
    r.params = std::move(params);
    r.kind = CertKind::Coloring;
    r.bound = bound;
    r.coloring = std::move(c);
    r.route = std::move(route);
    return r;
}

Certificate Certificate::make_witness(std::string theorem, std::map<std::string, int> params, int bound,
                                      SubdivisionWitness w, std::string route) {
    Certificate r;
    r.theorem = std::move(theorem);
    r.params = std::move(params);
    r.kind = CertKind::Witness;
    r.bound = bound;
    r.witness = std::move(w);
    r.route = std::move(route);
    return r;
}

Certificate Certificate::make_diagnostic(std::string theorem, std::map<std::string, int> params, int bound,
                                         Diagnostic diag) {
    Certificate r;
    r.theorem = std::move(theorem);
    r.params = std::move(params);
    r.kind = CertKind::Diagnostic;
    r.bound = bound;
    r.route = "diagnostic:" + diag.lemma;
    r.diagnostic = std::move(diag);
    return r;
}

bool verify_certificate(const Digraph& d, const Certificate& c) {
    switch (c.kind) {
        case CertKind::Coloring:
            if (!c.coloring) return false;
            if (c.coloring->palette_size > c.bound) return false;
            try {
                return verify_coloring(d, *c.coloring);
            } catch (const DomainMismatch&) {
                return false;
            }
        case CertKind::Witness:
            return c.witness && verify_subdivision(d, *c.witness);
        case CertKind::Diagnostic:
            return false;
    }
    return false;
}

bool verify_certificate(const Digraph& d, const Certificate& c, const OrientedCycleSpec& target) {
    if (!verify_certificate(d, c)) return false;
    if (c.kind == CertKind::Witness) return equivalent_specs(c.witness->spec, target);
    return true;
}

namespace {

const char* kind_name(CertKind k) {
    switch (k) {
        case CertKind::Coloring: return "coloring";
        case CertKind::Witness: return "witness";
        case CertKind::Diagnostic: return "diagnostic";
    }
    return "?";
}

json spec_json(const OrientedCycleSpec& s) {
    json blocks = json::array();
    for (const Block& b : s.blocks) blocks.push_back({{"len", b.length}, {"dir", b.dir == Dir::Forward ? "fwd" : "bwd"}});
    return {{"blocks", blocks}};
}

OrientedCycleSpec spec_from(const json& j) {
    OrientedCycleSpec s;
    for (const auto& b : j.at("blocks")) {
        std::string dir = b.at("dir").get<std::string>();
        if (dir != "fwd" && dir != "bwd") throw ParseError("block direction must be fwd or bwd");
        s.blocks.push_back({b.at("len").get<int>(), dir == "fwd" ? Dir::Forward : Dir::Backward});
    }
    return s;
}

}  // namespace

std::string spec_to_string(const OrientedCycleSpec& s) { return spec_json(s).dump(); }

std::string certificate_to_json(const Certificate& c) {
    json j;
    j["theorem"] = c.theorem;
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    j["params"] = params;
    j["kind"] = kind_name(c.kind);
    j["bound"] = c.bound;
    if (c.kind == CertKind::Coloring && c.coloring) {
        j["coloring"] = c.coloring->color;
        j["palette_size"] = c.coloring->palette_size;
    } else if (c.kind == CertKind::Witness && c.witness) {
        j["witness"] = {{"spec", spec_json(c.witness->spec)}, {"branch", c.witness->branch}, {"paths", c.witness->paths}};
    } else if (c.kind == CertKind::Diagnostic && c.diagnostic) {
        j["diagnostic"] = {{"lemma", c.diagnostic->lemma},
                           {"message", c.diagnostic->message},
                           {"instance", format_digraph(c.diagnostic->instance)}};
    }
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.theorem = j.at("theorem").get<std::string>();
        for (const auto& [k, v] : j.at("params").items()) c.params[k] = v.get<int>();
        std::string kind = j.at("kind").get<std::string>();
        c.bound = j.at("bound").get<int>();
        if (kind == "coloring") {
            c.kind = CertKind::Coloring;
            Coloring col;
            col.color = j.at("coloring").get<std::vector<int>>();
            if (j.contains("palette_size")) {
                col.palette_size = j["palette_size"].get<int>();
            } else {
                for (int x : col.color) col.palette_size = std::max(col.palette_size, x + 1);
            }
            c.coloring = col;
        } else if (kind == "witness") {
            c.kind = CertKind::Witness;
            const json& w = j.at("witness");
            c.witness = SubdivisionWitness{spec_from(w.at("spec")), w.at("branch").get<std::vector<int>>(),
                                           w.at("paths").get<std::vector<std::vector<int>>>()};
        } else if (kind == "diagnostic") {
            c.kind = CertKind::Diagnostic;
            const json& g = j.at("diagnostic");
            c.diagnostic = Diagnostic{g.at("lemma").get<std::string>(), g.at("message").get<std::string>(),
                                      parse_digraph(g.at("instance").get<std::string>())};
        } else {
            throw ParseError("unknown certificate kind " + kind);
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
}

}  // namespace cw
