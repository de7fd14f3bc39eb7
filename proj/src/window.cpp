#include "ggt/window.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggt {

WindowedShiftComplex::WindowedShiftComplex(MedianGraph window,
                                           std::vector<std::pair<int, int>> coords,
                                           std::pair<int, int> shift)
    : window_(std::move(window)), coords_(std::move(coords)), shift_(shift)
{
    int n = window_.vertex_count();
    if (static_cast<int>(coords_.size()) != n)
        throw std::invalid_argument("window: one coordinate pair per vertex required");
    for (int v = 0; v < n; ++v)
        if (!coord_index_.emplace(coords_[v], v).second)
            throw std::invalid_argument("window: duplicate vertex coordinates");

    auto lookup = [&](std::pair<int, int> c) -> int {
        auto it = coord_index_.find(c);
        return it == coord_index_.end() ? -1 : it->second;
    };
    sigma_.resize(n);
    sigma_inv_.resize(n);
    interior_.resize(n);
    for (int v = 0; v < n; ++v) {
        auto [x, y] = coords_[v];
        sigma_[v] = lookup({x + shift_.first, y + shift_.second});
        sigma_inv_[v] = lookup({x - shift_.first, y - shift_.second});
        interior_[v] = sigma_[v] >= 0 && sigma_inv_[v] >= 0;
    }

    planes_ = hyperplanes(window_);
    edge_plane_.assign(window_.edge_count(), -1);
    for (const auto& h : planes_)
        for (int e : h.edge_ids) edge_plane_[e] = h.id;
    for (int e = 0; e < window_.edge_count(); ++e) edge_index_.emplace(window_.edges[e], e);

    // The shift must respect adjacency wherever it is defined.
    for (const auto& [u, v] : window_.edges) {
        if (sigma_[u] < 0 || sigma_[v] < 0) continue;
        auto img = std::minmax(sigma_[u], sigma_[v]);
        if (!edge_index_.count({img.first, img.second}))
            throw std::invalid_argument("window: shift does not preserve adjacency");
    }
}

std::optional<int> WindowedShiftComplex::vertex_at(std::pair<int, int> coord) const
{
    auto it = coord_index_.find(coord);
    if (it == coord_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> WindowedShiftComplex::shifted_vertex(int v, int power) const
{
    auto [x, y] = coords_[v];
    return vertex_at({x + power * shift_.first, y + power * shift_.second});
}

int WindowedShiftComplex::plane_of_edge(int u, int v) const
{
    if (u > v) std::swap(u, v);
    auto it = edge_index_.find({u, v});
    if (it == edge_index_.end()) throw std::invalid_argument("plane_of_edge: no such edge");
    return edge_plane_[it->second];
}

WindowedShiftComplex::PlaneImage WindowedShiftComplex::image_plane(int plane, int power) const
{
    const auto& h = planes_.at(plane);
    PlaneImage image;
    int orientation = 0;
    for (int e : h.edge_ids) {
        auto [u, v] = window_.edges[e];
        auto iu = shifted_vertex(u, power);
        auto iv = shifted_vertex(v, power);
        if (!iu || !iv) continue;
        auto key = std::minmax(*iu, *iv);
        auto it = edge_index_.find({key.first, key.second});
        if (it == edge_index_.end()) continue;
        int target = edge_plane_[it->second];
        if (image.plane == -1) image.plane = target;
        if (image.plane != target) return {};  // image spread over two classes

        // Transport the orientation along this edge pair.
        int v_side = h.side[v];  // +1 or -1
        int image_side = planes_[target].side[*iv];
        int this_orientation = (v_side == image_side) ? 1 : -1;
        if (orientation == 0) orientation = this_orientation;
        if (orientation != this_orientation) return {};
    }
    if (image.plane == -1) return {};
    image.orientation = orientation;
    image.resolvable = true;
    return image;
}

const std::vector<int>& WindowedShiftComplex::image_plus(const PlaneImage& image) const
{
    const auto& p = planes_.at(image.plane);
    return image.orientation > 0 ? p.plus : p.minus;
}

const std::vector<int>& WindowedShiftComplex::image_minus(const PlaneImage& image) const
{
    const auto& p = planes_.at(image.plane);
    return image.orientation > 0 ? p.minus : p.plus;
}

WindowedShiftComplex line_window(int N)
{
    if (N < 1) throw std::invalid_argument("line_window: N must be >= 1");
    std::vector<std::pair<int, int>> coords;
    std::vector<std::pair<int, int>> edges;
    for (int x = -N; x <= N; ++x) {
        coords.emplace_back(x, 0);
        if (x < N) edges.emplace_back(x + N, x + N + 1);
    }
    return WindowedShiftComplex(make_median_graph(2 * N + 1, std::move(edges)),
                                std::move(coords), {1, 0});
}

WindowedShiftComplex staircase_window(int N)
{
    if (N < 1) throw std::invalid_argument("staircase_window: N must be >= 1");
    // Unit squares at (ceil(j/2), floor(j/2)) for j = -2N..2N-1; the
    // diagonal shift moves cell j to cell j+2.
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> coords;
    auto vertex = [&](int x, int y) {
        auto [it, fresh] = index.emplace(std::pair{x, y}, static_cast<int>(coords.size()));
        if (fresh) coords.emplace_back(x, y);
        return it->second;
    };

    std::vector<std::pair<int, int>> edges;
    for (int j = -2 * N; j < 2 * N; ++j) {
        int x = (j >= 0 ? (j + 1) / 2 : -((-j) / 2));
        int y = (j >= 0 ? j / 2 : -((-j + 1) / 2));
        int a = vertex(x, y), b = vertex(x + 1, y), c = vertex(x, y + 1), d = vertex(x + 1, y + 1);
        edges.emplace_back(std::min(a, b), std::max(a, b));
        edges.emplace_back(std::min(c, d), std::max(c, d));
        edges.emplace_back(std::min(a, c), std::max(a, c));
        edges.emplace_back(std::min(b, d), std::max(b, d));
    }
    auto graph = make_median_graph(static_cast<int>(coords.size()), std::move(edges));
    return WindowedShiftComplex(std::move(graph), std::move(coords), {1, 1});
}

WindowedShiftComplex ladder_window(int N, int step)
{
    if (N < 1 || step < 1) throw std::invalid_argument("ladder_window: bad parameters");
    std::vector<std::pair<int, int>> coords;
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int x, int y) { return 2 * (x + N) + y; };
    for (int x = -N; x <= N; ++x) {
        coords.emplace_back(x, 0);  // coords land in id order
        coords.emplace_back(x, 1);
        edges.emplace_back(id(x, 0), id(x, 1));
        if (x < N) {
            edges.emplace_back(id(x, 0), id(x + 1, 0));
            edges.emplace_back(id(x, 1), id(x + 1, 1));
        }
    }
    auto graph = make_median_graph(static_cast<int>(coords.size()), std::move(edges));
    return WindowedShiftComplex(std::move(graph), std::move(coords), {step, 0});
}

namespace {

bool proper_subset(const std::vector<int>& a, const std::vector<int>& b)
{
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Where the support of `plane` sits relative to oriented halfspaces:
// +1 inside plus, -1 inside minus, 0 when it meets both.
int support_side(const std::vector<Hyperplane>& planes, const Hyperplane& of, int plane)
{
    bool plus = false, minus = false;
    for (int x : planes[plane].support) (of.side[x] > 0 ? plus : minus) = true;
    return plus && minus ? 0 : (plus ? 1 : -1);
}

}  // namespace

SkewerResult skewer_check(const WindowedShiftComplex& w, int plane, int N)
{
    if (N < 1) throw std::invalid_argument("skewer_check: N must be >= 1");
    const auto& h = w.planes().at(plane);
    bool anchored = std::any_of(h.support.begin(), h.support.end(),
                                [&](int v) { return w.in_interior(v); });
    if (!anchored) throw std::invalid_argument("skewer_check: hyperplane not in the interior");

    for (int n = 1; n <= N; ++n) {
        auto image = w.image_plane(plane, n);
        if (!image.resolvable)
            return {SkewerResult::Kind::Inconclusive, n, SkewerResult::Direction::None};
        if (image.plane == plane)
            return {SkewerResult::Kind::StabilisesPower, n, SkewerResult::Direction::None};
        if (proper_subset(w.image_plus(image), h.plus))
            return {SkewerResult::Kind::Skewers, n, SkewerResult::Direction::PlusInPlus};
        if (proper_subset(w.image_minus(image), h.minus))
            return {SkewerResult::Kind::Skewers, n, SkewerResult::Direction::MinusInMinus};
    }
    return {SkewerResult::Kind::Inconclusive, N, SkewerResult::Direction::None};
}

std::vector<int> crossing_set(const WindowedShiftComplex& w, int plane)
{
    if (plane < 0 || plane >= static_cast<int>(w.planes().size()))
        throw std::out_of_range("crossing_set: no such hyperplane");
    std::vector<int> crossing;
    for (const auto& k : w.planes()) {
        if (k.id == plane) continue;
        if (support_side(w.planes(), k, plane) == 0) crossing.push_back(k.id);
    }
    return crossing;
}

SymDiffResult hyperplane_symdiff(const WindowedShiftComplex& w, int plane, int power)
{
    auto image = w.image_plane(plane, power);
    if (!image.resolvable)
        throw std::invalid_argument("hyperplane_symdiff: image leaves the window");

    auto first = crossing_set(w, plane);
    auto second = crossing_set(w, image.plane);
    SymDiffResult result;
    std::set_symmetric_difference(first.begin(), first.end(), second.begin(), second.end(),
                                  std::back_inserter(result.planes));

    auto support_interior = [&](const Hyperplane& h) {
        return std::all_of(h.support.begin(), h.support.end(),
                           [&](int v) { return w.in_interior(v); });
    };
    result.verified = support_interior(w.planes()[plane]) &&
                      support_interior(w.planes()[image.plane]);
    return result;
}

int separation_index(const WindowedShiftComplex& w, int k_plane, int h_plane, int N)
{
    if (N < 0) throw std::invalid_argument("separation_index: N must be >= 0");
    const auto& k = w.planes().at(k_plane);

    std::vector<std::pair<int, int>> images;  // (power, side of k)
    for (int n = -N; n <= N; ++n) {
        auto image = w.image_plane(h_plane, n);
        if (!image.resolvable)
            throw std::invalid_argument("separation_index: window too small for |n| <= N");
        images.emplace_back(n, support_side(w.planes(), k, image.plane));
    }

    int best = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (images[i].second * images[j].second != -1) continue;
            int gap = std::abs(images[i].first - images[j].first);
            if (best == 0 || gap < best) best = gap;
        }
    return best;
}

TransferResult transfer(const WindowedShiftComplex& w, int plane, int power)
{
    const auto& h = w.planes().at(plane);

    // g^-1 M+ = hyperplanes lying in the (transported) plus side of
    // sigma^-power(h), which the window can test directly.
    auto preimage = w.image_plane(plane, -power);
    if (!preimage.resolvable) return {true, 0, false, {}, {}};

    std::vector<char> in_m(w.planes().size(), 0), in_gm(w.planes().size(), 0);
    const auto& pre = w.planes()[preimage.plane];
    for (const auto& k : w.planes()) {
        if (support_side(w.planes(), h, k.id) == 1) in_m[k.id] = 1;
        int side = support_side(w.planes(), pre, k.id);
        if (side == preimage.orientation) in_gm[k.id] = 1;
    }

    TransferResult result;
    for (const auto& k : w.planes()) {
        if (in_m[k.id] && !in_gm[k.id]) result.left_difference.push_back(k.id);
        if (!in_m[k.id] && in_gm[k.id]) result.right_difference.push_back(k.id);
    }
    result.value = static_cast<int>(result.left_difference.size()) -
                   static_cast<int>(result.right_difference.size());

    auto support_interior = [&](const Hyperplane& p) {
        return std::all_of(p.support.begin(), p.support.end(),
                           [&](int v) { return w.in_interior(v); });
    };
    result.verified = support_interior(h) && support_interior(pre);
    for (int id : result.left_difference)
        result.verified = result.verified && support_interior(w.planes()[id]);
    for (int id : result.right_difference)
        result.verified = result.verified && support_interior(w.planes()[id]);
    return result;
}

}  // namespace ggt
