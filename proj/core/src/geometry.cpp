#include "covsim/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace covsim {

namespace {

std::vector<AntennaCoord> grid_coords(int m_rows, int n_cols) {
    std::vector<AntennaCoord> coords;
    coords.reserve(static_cast<std::size_t>(m_rows) * n_cols);
    for (int x = 0; x < n_cols; ++x)
        for (int y = 0; y < m_rows; ++y)
            coords.push_back({x, y});
    return coords;
}

} // namespace

AntennaLayout AntennaLayout::ula(int n_antennas) {
    if (n_antennas < 1)
        throw std::invalid_argument("ULA needs at least one antenna");
    AntennaLayout l;
    l.kind_ = LayoutKind::kUla;
    l.n_antennas_ = n_antennas;
    l.m_rows_ = 1;
    l.n_cols_ = n_antennas;
    l.coords_ = grid_coords(1, n_antennas);
    return l;
}

AntennaLayout AntennaLayout::upa(int m_rows, int n_cols) {
    if (m_rows < 1 || n_cols < 1)
        throw std::invalid_argument("UPA panel dimensions must be positive");
    AntennaLayout l;
    l.kind_ = LayoutKind::kUpa;
    l.n_antennas_ = m_rows * n_cols;
    l.m_rows_ = m_rows;
    l.n_cols_ = n_cols;
    l.coords_ = grid_coords(m_rows, n_cols);
    return l;
}

AntennaLayout AntennaLayout::generic(std::vector<AntennaCoord> coords) {
    if (coords.empty())
        throw std::invalid_argument("generic layout needs at least one antenna");
    std::set<std::pair<int, int>> seen;
    for (const auto &c : coords)
        if (!seen.insert({c.x, c.y}).second)
            throw std::invalid_argument("generic layout has duplicate coordinates");
    AntennaLayout l;
    l.kind_ = LayoutKind::kGeneric;
    l.n_antennas_ = static_cast<int>(coords.size());
    l.coords_ = std::move(coords);
    return l;
}

AntennaCoord index_to_coord(int antenna, const AntennaLayout &layout) {
    if (antenna < 0 || antenna >= layout.size())
        throw std::out_of_range("antenna index " + std::to_string(antenna) +
                                " outside layout of size " +
                                std::to_string(layout.size()));
    if (layout.kind() == LayoutKind::kGeneric)
        return layout.coords()[static_cast<std::size_t>(antenna)];
    const int m = layout.rows();
    return {antenna / m, antenna % m};
}

int coord_to_index(AntennaCoord c, const AntennaLayout &layout) {
    if (layout.kind() == LayoutKind::kGeneric) {
        const auto &coords = layout.coords();
        auto it = std::find(coords.begin(), coords.end(), c);
        if (it == coords.end())
            throw std::out_of_range("coordinate not present in generic layout");
        return static_cast<int>(it - coords.begin());
    }
    if (c.x < 0 || c.x >= layout.cols() || c.y < 0 || c.y >= layout.rows())
        throw std::out_of_range("coordinate outside panel bounds");
    return c.x * layout.rows() + c.y;
}

PairPartition::PairPartition(const AntennaLayout &layout)
    : n_antennas_(layout.size()) {
    const auto &coords = layout.coords();
    const int n = n_antennas_;

    // Group all ordered pairs by exact integer displacement. Iterating p then
    // q keeps members of every class sorted lexicographically, which in turn
    // makes the class-averaging estimator reproduce the plain off-diagonal
    // averages on 1xN panels bit for bit.
    std::map<std::pair<int, int>, int> index_of;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            std::pair<int, int> d{coords[q].x - coords[p].x,
                                  coords[q].y - coords[p].y};
            auto [it, inserted] = index_of.try_emplace(d, static_cast<int>(classes_.size()));
            if (inserted)
                classes_.push_back({d.first, d.second, {}});
            classes_[static_cast<std::size_t>(it->second)].members.emplace_back(p, q);
        }
    }

    mirror_.resize(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        auto it = index_of.find({-classes_[i].dx, -classes_[i].dy});
        // (p, q) in a class implies (q, p) in the mirrored one, so it exists.
        mirror_[i] = it->second;
    }
}

std::vector<PairClass> equivalence_classes(const AntennaLayout &layout) {
    return PairPartition(layout).classes();
}

} // namespace covsim
