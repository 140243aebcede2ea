#ifndef COVSIM_GEOMETRY_HPP
#define COVSIM_GEOMETRY_HPP

#include <utility>
#include <vector>

namespace covsim {

enum class LayoutKind { kUla, kUpa, kGeneric };

// Lattice position of an antenna: x is the column (0..N-1), y the row
// (0..M-1). Antennas are indexed column-major, p = x*M + y.
struct AntennaCoord {
    int x = 0;
    int y = 0;
    bool operator==(const AntennaCoord &) const = default;
};

class AntennaLayout {
  public:
    static AntennaLayout ula(int n_antennas);
    static AntennaLayout upa(int m_rows, int n_cols);
    static AntennaLayout generic(std::vector<AntennaCoord> coords);

    LayoutKind kind() const { return kind_; }
    int size() const { return n_antennas_; }
    // Rows (M) and columns (N) of the panel; a ULA is the M = 1 special case.
    // Zero for generic layouts.
    int rows() const { return m_rows_; }
    int cols() const { return n_cols_; }
    const std::vector<AntennaCoord> &coords() const { return coords_; }

  private:
    AntennaLayout() = default;

    LayoutKind kind_ = LayoutKind::kUla;
    int n_antennas_ = 0;
    int m_rows_ = 0;
    int n_cols_ = 0;
    std::vector<AntennaCoord> coords_;
};

AntennaCoord index_to_coord(int antenna, const AntennaLayout &layout);
int coord_to_index(AntennaCoord c, const AntennaLayout &layout);

// All ordered antenna pairs (p, q) whose displacement coord(q) - coord(p)
// equals (dx, dy). Covariance entries are statistically equal within a class.
struct PairClass {
    int dx = 0;
    int dy = 0;
    std::vector<std::pair<int, int>> members;
    int cardinality() const { return static_cast<int>(members.size()); }
};

// Partition of all n_t^2 ordered antenna pairs into translation-equivalence
// classes. Built once per layout and shared read-only by the estimators.
class PairPartition {
  public:
    explicit PairPartition(const AntennaLayout &layout);

    const std::vector<PairClass> &classes() const { return classes_; }
    // Index of the class with negated displacement; mirror_of(i) == i only
    // for the (0, 0) class.
    int mirror_of(int class_index) const { return mirror_[class_index]; }
    int size() const { return n_antennas_; }

  private:
    std::vector<PairClass> classes_;
    std::vector<int> mirror_;
    int n_antennas_ = 0;
};

std::vector<PairClass> equivalence_classes(const AntennaLayout &layout);

} // namespace covsim

#endif
