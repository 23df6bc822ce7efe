#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>
#include <boost/property_map/property_map.hpp>

#include "sas/crossing.hpp"

namespace sas {

namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                    boost::property<boost::edge_index_t, std::size_t>>;
using EmbeddingStorage = std::vector<std::vector<boost::graph_traits<Graph>::edge_descriptor>>;

Graph make_graph(std::size_t vertex_count, const std::vector<AbstractEdge>& edges) {
    Graph g(vertex_count);
    std::size_t k = 0;
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count || u == v) throw LayoutError("graph is not simple");
        boost::add_edge(u, v, k++, g);
    }
    return g;
}

struct FaceCounter : boost::planar_face_traversal_visitor {
    std::vector<std::size_t>* sizes;
    std::size_t current = 0;
    void begin_face() { current = 0; }
    template <typename Edge>
    void next_edge(Edge) {
        ++current;
    }
    void end_face() { sizes->push_back(current); }
};

}  // namespace

bool is_planar_abstract(std::size_t vertex_count, const std::vector<AbstractEdge>& edges) {
    Graph g = make_graph(vertex_count, edges);
    return boost::boyer_myrvold_planarity_test(g);
}

std::vector<std::size_t> face_sizes(std::size_t vertex_count, const std::vector<AbstractEdge>& edges) {
    Graph g = make_graph(vertex_count, edges);
    EmbeddingStorage storage(boost::num_vertices(g));
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                             boost::boyer_myrvold_params::embedding = embedding))
        return {};
    std::vector<std::size_t> sizes;
    FaceCounter visitor;
    visitor.sizes = &sizes;
    boost::planar_face_traversal(g, &storage[0], visitor);
    return sizes;
}

}  // namespace sas
