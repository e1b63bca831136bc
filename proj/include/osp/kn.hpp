#pragma once

#include <string>
#include <vector>

#include "osp/osp.hpp"

namespace osp {

// KN letters reuse Letter: integer(k) for k, zero() for 0, bar(k) for k-bar.
// Their order is 1 < ... < m < 0 < m-bar < ... < 1-bar.
bool kn_less(Letter x, Letter y);

struct KNColumn {
    Word entries;  // top to bottom
    bool spin = false;
    bool operator==(const KNColumn&) const = default;
    auto operator<=>(const KNColumn&) const = default;
};

struct KNTableau {
    std::vector<KNColumn> cols;  // left to right; the rightmost comes from T_1
    std::vector<int> heights() const;
    bool operator==(const KNTableau&) const = default;
    auto operator<=>(const KNTableau&) const = default;
};

KNColumn to_kn_column(const Piece& T, G g, int m);
KNTableau to_kn_tableau(const OspTableau& T, int m);
Piece from_kn_column(const KNColumn& c, G g, int m, int a);
OspTableau from_kn_tableau(const KNTableau& K, const PShape& s, int m);

// doubled epsilon weight
std::vector<int> kn_weight(const KNTableau& K, int m);

std::string to_string(const KNColumn& c);
std::string to_string(const KNTableau& K);

struct KNReport {
    bool ok = true;
    std::string witness;
    std::size_t count = 0;
    long long weyl_dim = 0;
    std::vector<int> highest_weight2;
    std::vector<int> heights;
};
KNReport verify_kn_correspondence(const PShape& s, int m);

}  // namespace osp
