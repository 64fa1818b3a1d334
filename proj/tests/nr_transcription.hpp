#pragma once

// Second, independently keyed copy of the r_ij table in plain notation.

#include <array>
#include <string_view>

namespace cdv::nrmoduli::testdata {

struct TextEntry {
  int i;
  int j;
  std::string_view text;
};

inline constexpr std::array<TextEntry, 15> kRijText{{
    {1, 2, "(q1p1 + q2p2 - q3p3 - q4p4)^2"},
    {1, 3, "(q1p4 - q2p3 - q3p2 + q4p1)^2"},
    {1, 4, "-(q1p4 + q2p3 - q3p2 - q4p1)^2"},
    {1, 5, "-(q1p3 - q2p4 - q3p1 + q4p2)^2"},
    {1, 6, "(q1p3 + q2p4 + q3p1 + q4p2)^2"},
    {2, 3, "-(q1p4 - q2p3 + q3p2 - q4p1)^2"},
    {2, 4, "(q1p4 + q2p3 + q3p2 + q4p1)^2"},
    {2, 5, "(q1p3 - q2p4 + q3p1 - q4p2)^2"},
    {2, 6, "-(q1p3 + q2p4 - q3p1 - q4p2)^2"},
    {3, 4, "(q1p1 - q2p2 + q3p3 - q4p4)^2"},
    {3, 5, "(q1p2 + q2p1 + q3p4 + q4p3)^2"},
    {3, 6, "-(q1p2 - q2p1 - q3p4 + q4p3)^2"},
    {4, 5, "-(q1p2 - q2p1 + q3p4 - q4p3)^2"},
    {4, 6, "(q1p2 + q2p1 - q3p4 - q4p3)^2"},
    {5, 6, "(q1p1 - q2p2 - q3p3 + q4p4)^2"},
}};

}  // namespace cdv::nrmoduli::testdata
