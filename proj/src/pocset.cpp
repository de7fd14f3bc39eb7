#include "ggt/pocset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace ggt {

PocSet::PocSet(int wall_count, std::vector<std::vector<char>> order)
    : walls_(wall_count), order_(std::move(order))
{
    validate();
}

void PocSet::validate() const
{
    if (walls_ < 0) throw std::invalid_argument("poc-set: negative wall count");
    int h = halfspace_count();
    if (static_cast<int>(order_.size()) != h)
        throw std::invalid_argument("poc-set: order matrix has wrong size");
    for (const auto& row : order_)
        if (static_cast<int>(row.size()) != h)
            throw std::invalid_argument("poc-set: order matrix is not square");

    for (int a = 0; a < h; ++a) {
        if (!order_[a][a]) throw std::invalid_argument("poc-set: order must be reflexive");
        if (order_[a][complement(a)])
            throw std::invalid_argument("poc-set: a halfspace lies inside its complement");
        for (int b = 0; b < h; ++b) {
            if (!order_[a][b]) continue;
            if (a != b && order_[b][a])
                throw std::invalid_argument("poc-set: order is not antisymmetric");
            if (order_[a][b] != order_[complement(b)][complement(a)])
                throw std::invalid_argument("poc-set: complement involution broken");
            for (int c = 0; c < h; ++c)
                if (order_[b][c] && !order_[a][c])
                    throw std::invalid_argument("poc-set: order is not transitive");
        }
    }
}

PocSet crossing_walls(int k)
{
    std::vector<std::vector<char>> order(2 * k, std::vector<char>(2 * k, 0));
    for (int a = 0; a < 2 * k; ++a) order[a][a] = 1;
    return PocSet(k, std::move(order));
}

PocSet chain_walls(int k)
{
    std::vector<std::vector<char>> order(2 * k, std::vector<char>(2 * k, 0));
    for (int a = 0; a < 2 * k; ++a) order[a][a] = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            order[2 * i][2 * j] = 1;          // plus(i) <= plus(j)
            order[2 * j + 1][2 * i + 1] = 1;  // minus(j) <= minus(i)
        }
    return PocSet(k, std::move(order));
}

namespace {

// Orientations consistent with the containment order: chosen halfspaces
// a, c clash exactly when a <= complement(c).
void extend(const PocSet& p, std::uint32_t mask, int wall, std::vector<int>& chosen,
            std::vector<std::uint32_t>& out)
{
    if (wall == p.wall_count()) {
        out.push_back(mask);
        return;
    }
    for (int bit = 0; bit <= 1; ++bit) {
        int choice = 2 * wall + (bit ? 0 : 1);  // bit set = plus halfspace
        bool ok = true;
        for (int prev : chosen)
            if (p.leq(prev, PocSet::complement(choice))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(choice);
        extend(p, mask | (bit ? (std::uint32_t{1} << wall) : 0), wall + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<std::uint32_t> consistent_orientations(const PocSet& p)
{
    int k = p.wall_count();
    if (k > 24) throw std::invalid_argument("dual_cube_complex: more than 24 walls");

    std::vector<std::uint32_t> orientations;
    if (k == 0) {
        orientations.push_back(0);
    } else {
        // Fix a prefix of walls per task and extend the rest by DFS.
        int prefix = std::min(k, 10);
        std::vector<std::vector<std::uint32_t>> buckets(std::size_t{1} << prefix);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t head = 0; head < static_cast<std::int64_t>(buckets.size()); ++head) {
            std::vector<int> chosen;
            bool ok = true;
            for (int w = 0; w < prefix && ok; ++w) {
                int choice = 2 * w + ((head >> w) & 1 ? 0 : 1);
                for (int prev : chosen)
                    if (p.leq(prev, PocSet::complement(choice))) {
                        ok = false;
                        break;
                    }
                chosen.push_back(choice);
            }
            if (ok)
                extend(p, static_cast<std::uint32_t>(head), prefix, chosen, buckets[head]);
        }
        for (auto& bucket : buckets)
            orientations.insert(orientations.end(), bucket.begin(), bucket.end());
        std::sort(orientations.begin(), orientations.end());
    }
    return orientations;
}

DualComplex dual_cube_complex(const PocSet& p)
{
    int k = p.wall_count();
    auto orientations = consistent_orientations(p);

    std::unordered_map<std::uint32_t, int> index;
    index.reserve(orientations.size());
    for (int i = 0; i < static_cast<int>(orientations.size()); ++i)
        index.emplace(orientations[i], i);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(orientations.size()); ++i)
        for (int w = 0; w < k; ++w) {
            std::uint32_t flipped = orientations[i] ^ (std::uint32_t{1} << w);
            if (flipped <= orientations[i]) continue;
            if (auto it = index.find(flipped); it != index.end())
                edges.emplace_back(i, it->second);
        }

    DualComplex dual;
    dual.complex = make_median_graph(static_cast<int>(orientations.size()), std::move(edges));
    dual.orientations = std::move(orientations);
    dual.connected = is_connected(dual.complex.graph);
    return dual;
}

std::string pocset_to_json(const PocSet& p)
{
    nlohmann::json j;
    j["schema"] = "ggt/pocset/v1";
    j["wall_count"] = p.wall_count();
    auto& order = j["order"] = nlohmann::json::array();
    for (const auto& row : p.order()) {
        auto r = nlohmann::json::array();
        for (char bit : row) r.push_back(static_cast<int>(bit));
        order.push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

PocSet pocset_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    int walls = j.at("wall_count").get<int>();
    std::vector<std::vector<char>> order;
    for (const auto& row : j.at("order")) {
        std::vector<char> r;
        for (const auto& bit : row) r.push_back(static_cast<char>(bit.get<int>() != 0));
        order.push_back(std::move(r));
    }
    return PocSet(walls, std::move(order));
}

}  // namespace ggt
