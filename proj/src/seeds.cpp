#include "iim/seeds.hpp"

namespace iim {

std::optional<Graph> named_seed(const std::string& name) {
    if (name == "2K1") return Graph::empty_graph(2);
    if (name == "K2uK2uK1") return Graph(5, {{0, 1}, {2, 3}});
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'P' || name[0] == 'C')) {
        std::size_t n = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return std::nullopt;
            n = n * 10 + (name[i] - '0');
        }
        switch (name[0]) {
            case 'K': return n >= 1 && n <= 8 ? std::optional(Graph::complete(n)) : std::nullopt;
            case 'P': return n >= 2 && n <= 8 ? std::optional(Graph::path(n)) : std::nullopt;
            case 'C': return n >= 3 && n <= 8 ? std::optional(Graph::cycle(n)) : std::nullopt;
        }
    }
    return std::nullopt;
}

std::string named_seed_list() { return "K1..K8, P2..P8, C3..C8, 2K1, K2uK2uK1"; }

}  // namespace iim
