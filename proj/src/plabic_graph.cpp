#include "plab/plabic_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace plab {

int PlabicGraph::add_internal(char color) {
    Vertex v;
    v.color = color;
    v.alive = true;
    verts_.push_back(v);
    return static_cast<int>(verts_.size()) - 1;
}

int PlabicGraph::add_boundary(int pos, char color) {
    if (pos < 1 || pos > nb_) throw std::invalid_argument("add_boundary: position out of range");
    if (boundary_vertex(pos) >= 0) throw std::invalid_argument("add_boundary: duplicate position");
    Vertex v;
    v.color = color;
    v.boundary_pos = pos;
    v.alive = true;
    verts_.push_back(v);
    return static_cast<int>(verts_.size()) - 1;
}

int PlabicGraph::add_edge(int u, int v) {
    Edge e;
    e.u = u;
    e.v = v;
    e.alive = true;
    edges_.push_back(e);
    int id = static_cast<int>(edges_.size()) - 1;
    verts_[u].rot.push_back(id);
    verts_[v].rot.push_back(id);
    return id;
}

int PlabicGraph::add_edge_at(int u, int upos, int v, int vpos) {
    Edge e;
    e.u = u;
    e.v = v;
    e.alive = true;
    edges_.push_back(e);
    int id = static_cast<int>(edges_.size()) - 1;
    auto& ru = verts_[u].rot;
    ru.insert(ru.begin() + std::min<size_t>(upos, ru.size()), id);
    auto& rv = verts_[v].rot;
    rv.insert(rv.begin() + std::min<size_t>(vpos, rv.size()), id);
    return id;
}

void PlabicGraph::remove_edge(int e) {
    if (!edges_[e].alive) return;
    for (int v : {edges_[e].u, edges_[e].v}) {
        auto& r = verts_[v].rot;
        r.erase(std::remove(r.begin(), r.end(), e), r.end());
    }
    edges_[e].alive = false;
}

void PlabicGraph::remove_vertex(int v) {
    if (!verts_[v].rot.empty()) throw std::logic_error("remove_vertex: not isolated");
    verts_[v].alive = false;
}

void PlabicGraph::repoint_edge(int e, int from, int to) {
    if (edges_[e].u == from) edges_[e].u = to;
    else if (edges_[e].v == from) edges_[e].v = to;
    else throw std::logic_error("repoint_edge: vertex not an endpoint");
}

int PlabicGraph::add_dead_vertex_slot() {
    verts_.emplace_back();
    return static_cast<int>(verts_.size()) - 1;
}

int PlabicGraph::add_dead_edge_slot() {
    edges_.emplace_back();
    return static_cast<int>(edges_.size()) - 1;
}

int PlabicGraph::boundary_vertex(int pos) const {
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].alive && verts_[i].boundary_pos == pos) return static_cast<int>(i);
    return -1;
}

std::vector<int> PlabicGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int e : verts_[v].rot) out.push_back(other_end(e, v));
    return out;
}

std::vector<int> PlabicGraph::alive_vertices() const {
    std::vector<int> out;
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].alive) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> PlabicGraph::alive_edges() const {
    std::vector<int> out;
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].alive) out.push_back(static_cast<int>(i));
    return out;
}

int PlabicGraph::rot_index(int v, int e) const {
    const auto& r = verts_[v].rot;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == e) return static_cast<int>(i);
    throw std::logic_error("rot_index: edge not incident");
}

void PlabicGraph::replace_in_rotation(int v, int old_e, int new_e) {
    auto& r = verts_[v].rot;
    for (auto& x : r)
        if (x == old_e) { x = new_e; return; }
    throw std::logic_error("replace_in_rotation: edge not found");
}

int PlabicGraph::num_alive_vertices() const {
    int c = 0;
    for (const auto& v : verts_) c += v.alive ? 1 : 0;
    return c;
}

int PlabicGraph::num_alive_edges() const {
    int c = 0;
    for (const auto& e : edges_) c += e.alive ? 1 : 0;
    return c;
}

int PlabicGraph::num_faces() const {
    return num_alive_edges() - num_alive_vertices() + nb_ + 1;
}

bool PlabicGraph::connected_to_boundary(int v) const {
    std::vector<char> seen(verts_.size(), 0);
    std::queue<int> q;
    q.push(v);
    seen[v] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (verts_[x].boundary_pos > 0) return true;
        for (int e : verts_[x].rot) {
            int y = other_end(e, x);
            if (!seen[y]) { seen[y] = 1; q.push(y); }
        }
    }
    return false;
}

void PlabicGraph::validate(bool allow_bare) const {
    for (size_t i = 0; i < verts_.size(); ++i) {
        const auto& v = verts_[i];
        if (!v.alive) continue;
        for (int e : v.rot) {
            if (!edges_[e].alive) throw std::logic_error("validate: dead edge in rotation");
            if (edges_[e].u != static_cast<int>(i) && edges_[e].v != static_cast<int>(i))
                throw std::logic_error("validate: rotation lists a non-incident edge");
        }
        if (v.boundary_pos > 0) {
            if (v.rot.size() > 1) throw std::logic_error("validate: boundary vertex of degree > 1");
            if (v.rot.empty() && !allow_bare) throw std::logic_error("validate: bare boundary vertex");
        } else if (!connected_to_boundary(static_cast<int>(i))) {
            throw std::logic_error("validate: internal vertex not connected to boundary");
        }
    }
    for (size_t e = 0; e < edges_.size(); ++e) {
        if (!edges_[e].alive) continue;
        for (int v : {edges_[e].u, edges_[e].v}) {
            int cnt = 0;
            for (int x : verts_[v].rot) cnt += (x == static_cast<int>(e)) ? 1 : 0;
            if (cnt != 1) throw std::logic_error("validate: edge not listed exactly once in endpoint rotation");
        }
    }
}

void PlabicGraph::absorb_vertex(int dst, int src) {
    for (int e : std::vector<int>(verts_[src].rot)) {
        if (edges_[e].u == src) edges_[e].u = dst;
        if (edges_[e].v == src) edges_[e].v = dst;
        verts_[dst].rot.push_back(e);
    }
    verts_[src].rot.clear();
    verts_[src].alive = false;
}

std::string write_plabic(const PlabicGraph& g) {
    std::ostringstream os;
    os << "plabic v1\n";
    os << "n " << g.n() << "\n";
    for (int v : g.alive_vertices()) {
        const auto& vx = g.vert(v);
        os << "vertex " << v << " " << vx.color << " ";
        if (vx.boundary_pos > 0) os << "bd:" << vx.boundary_pos;
        else os << "int";
        os << "\n";
    }
    for (int v : g.alive_vertices()) {
        const auto& vx = g.vert(v);
        os << "rot " << v << ":";
        for (int e : vx.rot) os << " " << e;
        os << "\n";
    }
    for (int e : g.alive_edges()) os << "edge " << e << " " << g.edge(e).u << " " << g.edge(e).v << "\n";
    return os.str();
}

PlabicGraph read_plabic(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "plabic v1") throw std::invalid_argument("read_plabic: bad header");
    struct VDecl { char color; int pos; };
    std::map<int, VDecl> vdecl;
    std::map<int, std::pair<int, int>> edecl;
    std::map<int, std::vector<int>> rots;
    int n = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "n") {
            ls >> n;
        } else if (kw == "vertex") {
            int id;
            char color;
            std::string where;
            ls >> id >> color >> where;
            int pos = 0;
            if (where.rfind("bd:", 0) == 0) pos = std::stoi(where.substr(3));
            else if (where != "int") throw std::invalid_argument("read_plabic: bad vertex kind");
            vdecl[id] = {color, pos};
        } else if (kw == "rot") {
            std::string idtok;
            ls >> idtok;
            if (!idtok.empty() && idtok.back() == ':') idtok.pop_back();
            int id = std::stoi(idtok);
            int e;
            std::vector<int> r;
            while (ls >> e) r.push_back(e);
            rots[id] = r;
        } else if (kw == "edge") {
            int id, u, v;
            ls >> id >> u >> v;
            edecl[id] = {u, v};
        } else {
            throw std::invalid_argument("read_plabic: unknown line '" + kw + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("read_plabic: missing n");

    // Rebuild with identical ids; slots without declarations stay dead.
    PlabicGraph g(n);
    int next = 0;
    for (const auto& [id, d] : vdecl) {
        while (next < id) {
            g.add_dead_vertex_slot();
            ++next;
        }
        if (d.pos > 0) g.add_boundary(d.pos, d.color);
        else g.add_internal(d.color);
        ++next;
    }
    int next_e = 0;
    for (const auto& [id, uv] : edecl) {
        while (next_e < id) {
            g.add_dead_edge_slot();
            ++next_e;
        }
        g.add_edge(uv.first, uv.second);
        ++next_e;
    }
    // Apply declared rotations (overrides the add_edge insertion order).
    for (const auto& [id, r] : rots) g.set_rotation(id, r);
    g.validate(true);
    return g;
}

std::string canonical_encoding(const PlabicGraph& g) {
    std::map<int, int> relabel;
    std::vector<int> order;
    auto visit = [&](int v) {
        if (relabel.count(v)) return;
        relabel[v] = static_cast<int>(order.size());
        order.push_back(v);
    };
    for (int pos = 1; pos <= g.n(); ++pos) {
        int b = g.boundary_vertex(pos);
        if (b >= 0) visit(b);
    }
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        // rotate neighbor scan to start after the discovery edge for determinism
        for (int e : g.vert(v).rot) visit(g.other_end(e, v));
    }
    for (int v : g.alive_vertices()) visit(v);  // unreachable-from-boundary fallback

    std::ostringstream os;
    os << "n=" << g.n() << ";";
    for (int v : order) {
        const auto& vx = g.vert(v);
        os << "[" << vx.color;
        if (vx.boundary_pos > 0) os << "@" << vx.boundary_pos;
        os << ":";
        for (int e : vx.rot) os << relabel[g.other_end(e, v)] << ",";
        os << "]";
    }
    return os.str();
}

}  // namespace plab
