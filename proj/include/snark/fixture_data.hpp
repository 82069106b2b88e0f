// Appendix graph data: upper-adjacency strings, one per graph.
#pragma once

#include <string>
#include <vector>

namespace snark::fixture_data {

inline const std::vector<std::string>& appendix_als() {
  static const std::vector<std::string> g = {
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 10, 11, 12, 13, 14, 15, 16, 15, 17, 18, 19, 18, 20, 18, 21, 22, 21, 23, 23, 24, 22, 24, 25, 26, 26, 25, 26}",
  };
  return g;
}

inline const std::vector<std::string>& appendix_stable32() {
  static const std::vector<std::string> g = {
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 13, 11, 14, 14, 12, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 21, 27, 22, 28, 29, 30, 28, 31, 25, 29, 27, 30, 30, 28, 32, 31, 32, 32}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 13, 11, 14, 14, 12, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 21, 27, 22, 28, 29, 30, 28, 31, 25, 29, 30, 31, 30, 28, 32, 31, 32, 32}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 13, 11, 14, 14, 15, 16, 17, 13, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 21, 23, 29, 30, 24, 25, 31, 31, 27, 29, 28, 30, 32, 29, 32, 32}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 13, 11, 14, 14, 15, 16, 17, 13, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 21, 23, 29, 30, 24, 31, 32, 31, 27, 28, 29, 30, 31, 32, 30, 32}",
  };
  return g;
}

inline const std::vector<std::string>& appendix_strong34() {
  static const std::vector<std::string> g = {
      "{5, 9, 13, 12, 15, 25, 5, 8, 10, 6, 8, 9, 6, 15, 8, 14, 19, 10, 12, 20, 26, 29, 27, 14, 18, 25, 30, 17, 26, 28, 21, 23, 22, 23, 21, 24, 22, 24, 22, 24, 26, 31, 33, 32, 33, 31, 34, 32, 34, 32, 34}",
      "{4, 11, 15, 12, 19, 21, 5, 10, 25, 14, 16, 6, 11, 17, 23, 9, 21, 27, 16, 25, 29, 10, 30, 20, 12, 22, 14, 15, 26, 17, 18, 18, 18, 20, 23, 22, 24, 24, 24, 26, 28, 31, 33, 32, 33, 31, 34, 32, 34, 32, 34}",
      "{4, 11, 15, 12, 19, 21, 5, 8, 10, 14, 16, 6, 11, 17, 23, 8, 9, 29, 16, 13, 28, 20, 26, 12, 22, 14, 15, 17, 18, 18, 18, 20, 23, 22, 24, 25, 24, 24, 26, 27, 30, 31, 33, 32, 33, 31, 34, 32, 34, 32, 34}",
      "{5, 9, 27, 6, 12, 15, 5, 8, 10, 6, 8, 9, 6, 8, 28, 31, 10, 12, 12, 21, 23, 14, 18, 29, 15, 28, 20, 20, 22, 23, 18, 22, 30, 24, 20, 21, 24, 22, 24, 26, 29, 33, 30, 31, 28, 33, 32, 34, 32, 34, 34}",
      "{5, 9, 25, 6, 12, 15, 5, 8, 10, 6, 8, 9, 6, 8, 14, 26, 10, 12, 12, 21, 23, 14, 18, 33, 15, 20, 20, 22, 23, 18, 22, 28, 24, 20, 21, 24, 22, 24, 26, 27, 31, 29, 32, 30, 32, 30, 33, 31, 34, 34, 34}",
      "{5, 9, 25, 6, 12, 15, 5, 8, 10, 6, 8, 9, 6, 8, 16, 26, 10, 12, 13, 16, 19, 21, 14, 29, 23, 28, 16, 20, 18, 19, 21, 20, 23, 22, 22, 24, 24, 24, 26, 27, 30, 31, 33, 32, 33, 31, 34, 32, 34, 32, 34}",
      "{5, 9, 13, 6, 12, 33, 5, 8, 10, 6, 8, 9, 6, 8, 14, 17, 10, 12, 16, 21, 28, 25, 14, 23, 26, 16, 26, 31, 20, 18, 22, 19, 21, 20, 23, 22, 24, 24, 24, 26, 30, 28, 29, 33, 32, 30, 31, 32, 34, 34, 34}",
  };
  return g;
}

inline const std::vector<std::string>& appendix_strong36() {
  static const std::vector<std::string> g = {
      "{13, 15, 17, 25, 27, 31, 8, 10, 20, 8, 16, 17, 6, 11, 32, 18, 29, 8, 9, 19, 10, 13, 12, 12, 15, 27, 14, 16, 18, 16, 18, 21, 24, 22, 26, 22, 25, 23, 24, 28, 26, 26, 28, 30, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{13, 15, 17, 12, 25, 27, 8, 10, 20, 8, 16, 17, 6, 11, 31, 18, 30, 8, 9, 19, 10, 13, 12, 12, 15, 14, 16, 18, 16, 18, 21, 24, 22, 26, 22, 25, 23, 24, 28, 26, 26, 28, 32, 29, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{13, 15, 17, 6, 27, 35, 8, 10, 21, 8, 16, 17, 11, 21, 23, 18, 19, 8, 33, 36, 32, 34, 36, 28, 30, 15, 20, 26, 27, 30, 14, 32, 16, 18, 16, 18, 22, 23, 22, 24, 22, 24, 26, 26, 28, 29, 28, 30, 34, 32, 33, 35, 34, 36}",
      "{13, 15, 17, 12, 19, 21, 5, 10, 25, 8, 16, 17, 6, 11, 18, 23, 9, 21, 29, 25, 27, 10, 31, 20, 12, 15, 22, 14, 26, 16, 18, 16, 18, 20, 23, 22, 24, 24, 24, 26, 28, 28, 32, 30, 33, 35, 34, 35, 34, 36, 33, 36, 34, 36}",
      "{13, 15, 17, 12, 21, 29, 5, 8, 10, 8, 16, 17, 6, 11, 18, 27, 8, 9, 19, 10, 13, 22, 12, 31, 20, 14, 16, 18, 16, 28, 18, 23, 25, 24, 25, 23, 26, 24, 26, 24, 26, 28, 35, 33, 30, 32, 33, 36, 34, 36, 34, 35, 34, 36}",
      "{13, 15, 17, 6, 12, 21, 5, 8, 27, 8, 16, 17, 6, 11, 18, 8, 9, 31, 13, 30, 22, 27, 32, 12, 15, 20, 14, 16, 18, 16, 18, 23, 25, 28, 24, 25, 23, 26, 24, 26, 24, 26, 28, 29, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{13, 15, 17, 6, 12, 21, 5, 8, 10, 8, 16, 17, 6, 11, 18, 8, 9, 31, 13, 30, 22, 28, 12, 15, 20, 14, 16, 18, 16, 18, 23, 25, 27, 24, 25, 23, 26, 24, 26, 24, 26, 28, 29, 32, 33, 35, 33, 36, 34, 35, 34, 36, 34, 36}",
      "{5, 9, 13, 15, 27, 31, 8, 10, 35, 6, 8, 36, 6, 35, 19, 8, 16, 17, 10, 36, 25, 13, 16, 18, 20, 29, 32, 14, 15, 17, 16, 18, 30, 21, 24, 22, 24, 22, 23, 25, 26, 27, 26, 26, 33, 30, 32, 33, 30, 34, 32, 34, 34, 36}",
      "{5, 9, 13, 27, 29, 31, 5, 8, 10, 6, 8, 9, 6, 19, 8, 16, 17, 10, 25, 13, 18, 33, 20, 29, 32, 14, 15, 34, 16, 31, 33, 18, 34, 30, 21, 24, 22, 24, 23, 35, 25, 35, 26, 27, 36, 26, 36, 28, 30, 32, 30, 32, 34, 36}",
      "{5, 9, 25, 15, 31, 33, 5, 8, 10, 6, 8, 9, 6, 32, 8, 22, 27, 10, 12, 16, 26, 28, 24, 34, 17, 19, 22, 18, 19, 24, 17, 20, 18, 20, 18, 20, 25, 28, 29, 29, 32, 33, 35, 35, 26, 30, 28, 30, 30, 32, 36, 34, 36, 36}",
      "{5, 9, 13, 12, 15, 25, 5, 8, 10, 6, 8, 9, 6, 29, 8, 14, 19, 10, 12, 20, 26, 31, 30, 14, 18, 25, 29, 32, 17, 26, 28, 21, 23, 22, 23, 21, 24, 22, 24, 22, 24, 26, 30, 33, 35, 34, 35, 30, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 13, 12, 15, 25, 5, 8, 10, 6, 8, 9, 6, 15, 8, 14, 19, 10, 12, 20, 26, 31, 27, 14, 18, 25, 28, 17, 26, 30, 21, 23, 22, 23, 21, 24, 22, 24, 22, 24, 26, 28, 29, 32, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 13, 12, 14, 27, 5, 8, 10, 6, 8, 9, 6, 25, 8, 14, 19, 10, 12, 16, 20, 28, 26, 14, 18, 16, 27, 31, 17, 21, 23, 22, 23, 21, 24, 22, 24, 22, 24, 26, 29, 32, 28, 30, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 13, 12, 14, 15, 5, 8, 10, 6, 8, 9, 6, 25, 8, 14, 19, 10, 12, 16, 27, 29, 26, 14, 18, 16, 28, 17, 21, 23, 22, 23, 21, 24, 22, 24, 27, 22, 24, 26, 30, 31, 28, 32, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 13, 12, 14, 15, 5, 8, 10, 6, 8, 9, 6, 25, 8, 14, 19, 10, 12, 16, 20, 27, 26, 14, 18, 16, 28, 17, 21, 23, 22, 23, 21, 24, 22, 24, 22, 24, 26, 29, 31, 28, 30, 32, 33, 35, 34, 35, 34, 36, 33, 36, 34, 36}",
      "{5, 9, 13, 12, 15, 19, 5, 8, 10, 6, 8, 9, 6, 15, 8, 14, 31, 10, 12, 12, 25, 27, 14, 18, 19, 24, 22, 26, 27, 29, 33, 35, 34, 35, 20, 21, 30, 22, 23, 29, 25, 28, 26, 28, 26, 28, 30, 32, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 13, 12, 15, 19, 5, 8, 10, 6, 8, 9, 6, 15, 8, 14, 17, 10, 12, 12, 25, 27, 14, 18, 19, 24, 22, 26, 27, 18, 31, 30, 20, 21, 32, 22, 23, 29, 25, 28, 26, 28, 26, 28, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 25, 6, 12, 15, 5, 8, 10, 6, 8, 9, 6, 8, 26, 27, 10, 12, 13, 16, 19, 21, 14, 31, 23, 30, 16, 20, 26, 18, 19, 21, 20, 23, 22, 22, 24, 24, 24, 26, 28, 28, 32, 29, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 27, 6, 12, 15, 5, 8, 10, 6, 8, 9, 6, 8, 16, 28, 10, 12, 13, 16, 21, 17, 14, 31, 20, 30, 16, 18, 18, 23, 25, 20, 23, 26, 22, 24, 26, 24, 25, 24, 26, 28, 29, 32, 33, 35, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 27, 6, 12, 15, 5, 8, 10, 6, 8, 9, 6, 8, 14, 28, 10, 12, 13, 16, 21, 17, 14, 35, 18, 18, 22, 20, 30, 18, 19, 23, 25, 24, 25, 23, 26, 24, 26, 24, 26, 28, 29, 33, 31, 34, 32, 34, 32, 35, 33, 36, 36, 36}",
      "{5, 9, 13, 6, 12, 29, 5, 8, 10, 6, 8, 9, 6, 8, 14, 17, 10, 12, 16, 21, 28, 25, 14, 23, 26, 16, 26, 31, 20, 18, 22, 19, 21, 20, 23, 22, 24, 24, 24, 26, 30, 28, 33, 35, 32, 30, 33, 36, 34, 35, 34, 36, 34, 36}",
      "{5, 9, 13, 6, 12, 29, 5, 8, 10, 6, 8, 9, 6, 8, 14, 16, 10, 12, 13, 16, 21, 27, 14, 20, 18, 28, 33, 28, 18, 23, 35, 25, 20, 23, 26, 22, 24, 26, 24, 25, 24, 26, 28, 32, 30, 31, 34, 35, 33, 36, 34, 36, 34, 36}",
      "{5, 9, 25, 6, 12, 15, 5, 8, 10, 6, 8, 9, 6, 8, 14, 26, 10, 12, 12, 21, 23, 14, 18, 27, 15, 20, 20, 22, 23, 18, 22, 28, 24, 20, 21, 24, 22, 24, 26, 29, 31, 28, 32, 30, 33, 35, 34, 35, 34, 36, 33, 36, 34, 36}",
      "{5, 9, 11, 6, 25, 29, 5, 8, 10, 6, 8, 9, 6, 8, 11, 13, 10, 12, 16, 14, 25, 21, 23, 16, 18, 20, 21, 24, 20, 18, 24, 27, 26, 20, 22, 23, 22, 26, 24, 31, 28, 28, 32, 30, 33, 35, 34, 35, 34, 36, 33, 36, 34, 36}",
      "{5, 9, 11, 6, 12, 33, 5, 8, 10, 6, 8, 9, 6, 8, 11, 13, 10, 12, 16, 14, 15, 19, 28, 35, 16, 23, 28, 18, 20, 27, 25, 30, 22, 24, 21, 24, 22, 23, 25, 26, 26, 26, 28, 32, 32, 33, 36, 34, 36, 32, 34, 35, 34, 36}",
  };
  return g;
}

inline const std::vector<std::string>& appendix_no5cdc30() {
  static const std::vector<std::string> g = {
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 10, 11, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 22, 24, 25, 26, 27, 28, 29, 30, 27, 29, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 10, 11, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 24, 25, 22, 26, 27, 28, 27, 29, 29, 30, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 10, 11, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 24, 25, 26, 24, 27, 26, 28, 29, 29, 30, 30, 28, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 10, 11, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 24, 25, 26, 24, 27, 28, 29, 28, 26, 30, 29, 29, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 10, 11, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 24, 25, 26, 26, 27, 28, 29, 25, 28, 30, 29, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 15, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 24, 27, 25, 28, 22, 29, 23, 30, 30, 29, 28, 29, 27, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 15, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 24, 27, 28, 29, 22, 25, 23, 30, 30, 25, 28, 27, 28, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 15, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 24, 27, 28, 29, 22, 28, 23, 30, 30, 28, 29, 27, 29, 27, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 15, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 27, 28, 29, 30, 22, 24, 23, 25, 25, 27, 29, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 15, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 27, 28, 29, 30, 22, 24, 23, 26, 26, 27, 29, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 15, 19, 20, 21, 22, 23, 24, 19, 25, 24, 26, 27, 28, 27, 22, 29, 23, 30, 30, 29, 28, 26, 28, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 15, 19, 20, 21, 22, 23, 24, 19, 25, 24, 26, 27, 28, 29, 22, 27, 23, 30, 30, 27, 28, 26, 28, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 15, 19, 20, 21, 22, 23, 24, 19, 25, 24, 26, 27, 28, 29, 22, 29, 23, 30, 30, 29, 27, 26, 27, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 15, 19, 20, 21, 22, 23, 24, 19, 25, 26, 27, 28, 29, 30, 22, 24, 23, 30, 30, 26, 28, 27, 29, 29, 28}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 15, 19, 20, 21, 22, 23, 24, 19, 25, 26, 27, 28, 29, 30, 22, 26, 23, 30, 30, 24, 28, 27, 29, 29, 28}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 19, 25, 26, 25, 27, 28, 27, 26, 28, 23, 29, 24, 30, 30, 29, 29, 27, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 19, 25, 26, 25, 27, 28, 27, 26, 29, 23, 28, 24, 30, 30, 28, 29, 27, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 19, 25, 26, 25, 27, 28, 27, 26, 29, 23, 29, 24, 30, 30, 29, 28, 27, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 19, 25, 26, 27, 25, 28, 26, 27, 28, 23, 29, 24, 30, 30, 29, 27, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 19, 25, 26, 27, 25, 28, 26, 27, 29, 23, 28, 24, 30, 30, 28, 27, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 19, 25, 26, 27, 25, 28, 26, 27, 29, 23, 29, 24, 30, 30, 29, 27, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 27, 26, 25, 28, 21, 23, 25, 27, 24, 23, 29, 29, 30, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 27, 26, 25, 28, 25, 27, 26, 29, 23, 29, 24, 30, 30, 29, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 25, 26, 27, 26, 25, 28, 25, 27, 28, 29, 23, 29, 24, 30, 30, 29, 30, 28}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 19, 25, 26, 27, 21, 23, 25, 26, 27, 25, 28, 24, 23, 29, 29, 28, 30, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 19, 25, 26, 27, 25, 26, 27, 28, 27, 25, 29, 23, 28, 24, 30, 30, 28, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 19, 25, 26, 27, 25, 26, 28, 29, 27, 25, 28, 23, 29, 24, 30, 30, 29, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 11, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 23, 25, 26, 29, 24, 27, 28, 30, 26, 28, 29, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 23, 25, 23, 26, 21, 27, 22, 28, 28, 29, 27, 30, 27, 29, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 17, 23, 25, 23, 26, 21, 27, 28, 29, 28, 25, 30, 29, 30, 29, 27, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 19, 24, 24, 26, 22, 27, 28, 29, 28, 27, 30, 27, 29, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 19, 26, 26, 27, 22, 24, 23, 28, 28, 29, 30, 27, 29, 30, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 20, 22, 26, 21, 23, 23, 27, 28, 27, 29, 28, 30, 29, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 20, 22, 26, 21, 23, 27, 22, 28, 27, 29, 28, 30, 29, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 20, 26, 27, 21, 22, 22, 23, 28, 26, 29, 28, 30, 30, 29, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 22, 26, 27, 20, 23, 22, 23, 28, 26, 29, 28, 30, 30, 29, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 22, 26, 27, 20, 23, 22, 24, 28, 26, 29, 28, 30, 30, 28, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 24, 26, 27, 25, 28, 22, 28, 23, 29, 29, 28, 30, 26, 27, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 18, 20, 21, 22, 23, 24, 25, 24, 26, 27, 28, 29, 22, 28, 23, 30, 30, 28, 29, 26, 30, 27, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 17, 23, 24, 25, 21, 24, 26, 25, 27, 21, 28, 26, 29, 27, 29, 30, 26, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 17, 23, 24, 25, 21, 24, 26, 27, 28, 21, 29, 26, 27, 28, 30, 27, 29, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 18, 25, 21, 25, 27, 23, 28, 29, 26, 30, 30, 27, 28, 29, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 18, 25, 26, 23, 27, 21, 24, 27, 24, 28, 29, 30, 28, 30, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 18, 25, 26, 27, 28, 21, 23, 27, 23, 29, 28, 30, 30, 29, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 18, 25, 27, 25, 28, 21, 23, 29, 23, 28, 27, 30, 29, 30, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 18, 25, 27, 25, 28, 21, 29, 23, 28, 30, 28, 27, 29, 29, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 18, 25, 27, 25, 28, 21, 29, 23, 28, 30, 28, 27, 30, 29, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 13, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 18, 25, 27, 25, 28, 26, 29, 23, 28, 24, 30, 29, 28, 30, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 19, 21, 22, 23, 24, 25, 26, 25, 26, 27, 28, 21, 29, 23, 24, 30, 30, 28, 27, 30, 29, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 19, 22, 23, 24, 25, 26, 23, 20, 25, 27, 26, 24, 28, 29, 30, 28, 29, 30, 29, 28, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 19, 22, 23, 24, 25, 26, 23, 25, 27, 28, 22, 29, 24, 29, 27, 29, 30, 28, 27, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 22, 23, 24, 25, 26, 27, 19, 20, 26, 26, 28, 22, 29, 24, 25, 27, 28, 30, 29, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 22, 23, 24, 25, 26, 27, 19, 20, 26, 26, 28, 24, 29, 24, 27, 28, 30, 28, 29, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 22, 23, 24, 25, 26, 27, 24, 19, 22, 26, 23, 28, 25, 29, 27, 30, 29, 28, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 22, 23, 24, 25, 26, 27, 24, 19, 22, 26, 23, 28, 25, 29, 30, 27, 29, 28, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 22, 23, 24, 25, 26, 27, 24, 19, 26, 22, 26, 28, 25, 29, 30, 27, 28, 29, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 22, 23, 24, 25, 26, 27, 24, 19, 26, 27, 22, 28, 25, 29, 30, 26, 28, 29, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 11, 12, 10, 13, 14, 15, 16, 17, 18, 19, 20, 17, 21, 22, 23, 24, 25, 26, 27, 28, 19, 26, 29, 22, 26, 23, 24, 24, 30, 28, 29, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 22, 24, 25, 26, 27, 28, 29, 30, 27, 29, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 24, 25, 22, 26, 27, 28, 27, 29, 29, 30, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 24, 25, 26, 24, 27, 28, 29, 28, 26, 30, 29, 29, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 21, 24, 25, 26, 26, 27, 28, 29, 25, 28, 30, 29, 28, 30, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 22, 24, 23, 25, 26, 27, 28, 29, 30, 27, 29, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 24, 25, 22, 23, 26, 27, 28, 27, 29, 28, 30, 29, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 16, 21, 18, 22, 23, 20, 24, 25, 22, 26, 27, 26, 24, 28, 29, 28, 30, 30, 28, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 18, 21, 18, 20, 21, 22, 22, 23, 24, 25, 26, 27, 28, 29, 30, 27, 29, 28, 30, 30, 29}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 18, 21, 18, 20, 21, 22, 23, 24, 25, 26, 23, 27, 28, 27, 29, 26, 30, 29, 30, 29, 30}",
      "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 11, 10, 12, 13, 14, 14, 15, 16, 17, 18, 19, 20, 18, 21, 18, 20, 22, 23, 22, 24, 24, 25, 26, 27, 28, 29, 30, 27, 28, 29, 30, 29, 30}",
  };
  return g;
}

inline const std::vector<std::string>& appendix_no5cdc36() {
  static const std::vector<std::string> g = {
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 12, 26, 30, 10, 11, 28, 9, 13, 30, 16, 25, 29, 18, 27, 12, 17, 14, 29, 15, 20, 25, 19, 26, 16, 21, 22, 18, 22, 21, 24, 28, 24, 27, 23, 23, 31, 31, 33, 32, 33, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 12, 26, 30, 10, 11, 28, 9, 13, 30, 18, 25, 29, 16, 27, 12, 17, 14, 29, 15, 20, 25, 19, 26, 16, 21, 22, 18, 22, 21, 24, 28, 24, 27, 23, 23, 31, 31, 33, 32, 33, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 34, 33, 36, 32, 35, 13, 15, 17, 14, 16, 18, 10, 12, 26, 9, 11, 25, 14, 21, 13, 22, 15, 20, 16, 19, 27, 28, 30, 29, 20, 24, 19, 23, 36, 35, 22, 33, 32, 30, 34, 29, 34, 28, 33, 27, 32, 31, 31, 36, 35}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 18, 26, 27, 14, 15, 29, 9, 18, 25, 10, 17, 30, 12, 16, 13, 28, 17, 20, 27, 19, 26, 22, 29, 22, 28, 16, 20, 21, 21, 19, 23, 24, 24, 23, 31, 31, 30, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 10, 17, 28, 13, 25, 27, 8, 15, 26, 16, 29, 11, 15, 30, 12, 29, 14, 18, 19, 27, 18, 22, 21, 26, 21, 17, 22, 20, 20, 24, 28, 23, 24, 23, 31, 31, 30, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 33, 35, 34, 36, 31, 32, 15, 20, 22, 14, 17, 21, 8, 18, 20, 16, 19, 11, 13, 24, 15, 16, 28, 12, 27, 14, 30, 19, 26, 23, 24, 29, 18, 25, 26, 25, 23, 27, 30, 28, 29, 33, 34, 32, 32, 36, 31, 35, 31, 34, 36}",
      "{2, 3, 4, 33, 35, 34, 36, 31, 32, 16, 19, 20, 14, 17, 21, 8, 18, 20, 15, 22, 11, 13, 24, 15, 16, 28, 12, 27, 14, 30, 19, 26, 23, 24, 29, 18, 25, 26, 25, 23, 27, 30, 28, 29, 33, 34, 32, 32, 36, 31, 35, 31, 34, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 9, 10, 30, 11, 14, 29, 8, 9, 14, 11, 13, 12, 16, 25, 18, 15, 25, 17, 26, 17, 21, 30, 19, 28, 22, 20, 27, 20, 23, 24, 22, 24, 23, 31, 31, 33, 29, 32, 28, 33, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 34, 36, 32, 33, 31, 35, 9, 17, 20, 9, 13, 29, 8, 16, 30, 14, 15, 19, 12, 15, 26, 12, 17, 22, 28, 16, 24, 18, 25, 27, 25, 23, 21, 23, 24, 26, 21, 22, 32, 36, 36, 34, 31, 35, 28, 33, 35, 33, 34, 31, 32}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 6, 13, 28, 12, 27, 13, 17, 27, 9, 11, 26, 12, 18, 11, 12, 25, 16, 30, 15, 16, 30, 17, 29, 21, 22, 20, 25, 20, 24, 28, 23, 22, 24, 23, 31, 31, 33, 29, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 9, 25, 28, 7, 18, 26, 8, 10, 11, 15, 12, 30, 16, 30, 14, 29, 19, 27, 16, 21, 27, 20, 26, 17, 21, 22, 22, 25, 20, 29, 24, 28, 24, 23, 23, 31, 31, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 9, 25, 28, 7, 18, 26, 8, 10, 11, 15, 12, 30, 17, 30, 14, 29, 19, 27, 15, 21, 27, 20, 26, 22, 17, 22, 25, 21, 20, 29, 24, 28, 24, 23, 23, 31, 31, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 9, 25, 28, 7, 18, 26, 8, 17, 10, 15, 12, 30, 11, 30, 14, 29, 19, 27, 15, 21, 27, 20, 26, 22, 17, 22, 25, 21, 20, 29, 24, 28, 24, 23, 23, 31, 31, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 32, 34, 33, 35, 19, 21, 23, 20, 22, 23, 10, 14, 29, 9, 13, 24, 10, 12, 11, 16, 27, 18, 25, 17, 25, 15, 27, 22, 26, 19, 29, 20, 28, 21, 24, 20, 22, 36, 32, 34, 28, 34, 33, 33, 31, 31, 32, 35, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 11, 16, 28, 7, 14, 26, 8, 15, 9, 10, 13, 30, 17, 29, 12, 29, 19, 27, 21, 26, 21, 30, 18, 22, 17, 22, 20, 20, 25, 24, 28, 23, 24, 23, 31, 31, 27, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 11, 16, 28, 7, 14, 26, 8, 15, 9, 10, 13, 30, 17, 29, 12, 29, 19, 27, 21, 26, 21, 30, 16, 20, 22, 18, 22, 20, 25, 24, 28, 23, 24, 23, 31, 31, 27, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 6, 13, 28, 10, 27, 13, 18, 27, 11, 12, 26, 10, 12, 15, 11, 17, 16, 30, 16, 25, 30, 17, 29, 22, 21, 20, 25, 22, 24, 28, 21, 23, 24, 23, 31, 31, 33, 29, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 6, 13, 28, 10, 27, 13, 18, 27, 11, 12, 26, 10, 12, 15, 11, 17, 16, 30, 16, 25, 30, 17, 29, 21, 22, 20, 25, 22, 24, 28, 21, 23, 24, 23, 31, 31, 33, 29, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 6, 12, 30, 11, 28, 10, 14, 30, 12, 18, 26, 17, 25, 29, 15, 27, 13, 29, 16, 20, 26, 19, 25, 16, 21, 22, 18, 22, 21, 23, 27, 23, 28, 24, 24, 31, 31, 33, 32, 33, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 6, 9, 26, 8, 28, 9, 13, 27, 10, 30, 11, 16, 26, 18, 29, 17, 25, 30, 17, 29, 15, 16, 25, 21, 28, 19, 22, 20, 27, 20, 23, 24, 22, 24, 23, 31, 31, 33, 32, 33, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 9, 25, 28, 7, 18, 26, 10, 16, 10, 11, 15, 12, 30, 30, 14, 29, 19, 27, 16, 21, 27, 20, 26, 17, 21, 22, 22, 25, 20, 29, 24, 28, 24, 23, 23, 31, 31, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 9, 25, 28, 7, 18, 26, 10, 17, 10, 11, 15, 12, 30, 30, 14, 29, 19, 27, 15, 21, 27, 20, 26, 22, 17, 22, 25, 21, 20, 29, 24, 28, 24, 23, 23, 31, 31, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 6, 9, 30, 8, 13, 8, 11, 14, 12, 16, 25, 16, 28, 29, 18, 27, 18, 26, 15, 25, 17, 26, 21, 30, 19, 22, 28, 20, 20, 23, 24, 22, 24, 23, 31, 31, 33, 32, 29, 32, 33, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 6, 9, 30, 8, 13, 8, 11, 12, 14, 16, 25, 16, 27, 28, 18, 26, 17, 29, 15, 25, 17, 26, 21, 30, 19, 22, 20, 28, 20, 23, 24, 22, 24, 23, 31, 31, 33, 32, 29, 32, 33, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 6, 9, 30, 8, 13, 8, 11, 12, 14, 16, 25, 16, 28, 29, 18, 26, 17, 27, 15, 25, 17, 26, 21, 30, 19, 22, 20, 28, 20, 23, 24, 22, 24, 23, 31, 31, 33, 32, 29, 32, 33, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 32, 35, 33, 34, 6, 7, 30, 21, 29, 27, 28, 20, 21, 26, 18, 19, 21, 11, 12, 26, 20, 25, 19, 24, 17, 18, 22, 16, 18, 23, 16, 17, 19, 22, 27, 24, 36, 29, 33, 32, 28, 34, 31, 34, 33, 32, 31, 35, 36}",
      "{2, 3, 4, 31, 36, 32, 35, 33, 34, 6, 7, 30, 21, 29, 27, 28, 20, 21, 26, 18, 19, 21, 11, 12, 26, 20, 25, 19, 24, 17, 18, 28, 16, 18, 22, 16, 17, 19, 23, 22, 24, 36, 29, 34, 32, 27, 33, 31, 34, 33, 32, 31, 35, 36}",
      "{2, 3, 4, 31, 36, 32, 34, 33, 35, 6, 7, 30, 21, 29, 20, 28, 9, 14, 26, 17, 25, 11, 12, 28, 16, 22, 13, 15, 14, 24, 23, 19, 22, 19, 23, 18, 24, 20, 26, 21, 29, 27, 36, 34, 33, 27, 31, 33, 34, 32, 32, 31, 35, 36}",
      "{2, 3, 4, 31, 36, 32, 34, 33, 35, 6, 7, 30, 21, 29, 20, 28, 9, 13, 26, 17, 25, 11, 12, 28, 16, 22, 14, 15, 16, 23, 23, 24, 19, 22, 19, 18, 24, 20, 26, 21, 29, 27, 36, 34, 33, 27, 31, 33, 34, 32, 32, 31, 35, 36}",
      "{2, 3, 4, 31, 36, 32, 34, 33, 35, 6, 7, 30, 21, 29, 20, 28, 9, 13, 26, 17, 25, 11, 12, 28, 16, 22, 13, 15, 14, 23, 24, 19, 22, 19, 23, 18, 24, 20, 26, 21, 29, 27, 36, 34, 33, 27, 31, 33, 34, 32, 32, 31, 35, 36}",
      "{2, 3, 4, 31, 36, 32, 35, 33, 34, 6, 7, 30, 21, 29, 27, 28, 20, 21, 26, 18, 19, 21, 16, 28, 29, 12, 13, 26, 20, 25, 19, 23, 17, 22, 24, 16, 18, 22, 17, 19, 24, 23, 36, 32, 34, 27, 33, 31, 34, 33, 32, 31, 35, 36}",
      "{2, 3, 4, 33, 36, 31, 34, 32, 35, 6, 8, 16, 9, 11, 10, 11, 15, 12, 27, 12, 21, 17, 29, 24, 22, 14, 20, 25, 26, 28, 23, 30, 19, 22, 23, 24, 19, 20, 21, 31, 34, 33, 36, 36, 35, 29, 31, 30, 32, 28, 32, 35, 34, 33}",
      "{2, 3, 4, 31, 36, 32, 34, 33, 35, 6, 7, 30, 21, 29, 20, 28, 12, 24, 27, 10, 15, 22, 11, 16, 14, 26, 13, 25, 17, 26, 19, 22, 19, 24, 18, 23, 20, 27, 21, 28, 21, 29, 36, 25, 34, 34, 31, 33, 33, 32, 32, 31, 35, 36}",
      "{2, 3, 4, 31, 36, 32, 35, 33, 34, 6, 7, 30, 28, 29, 20, 21, 9, 10, 25, 23, 24, 15, 27, 14, 17, 22, 13, 17, 29, 16, 22, 16, 26, 19, 23, 19, 18, 21, 25, 21, 26, 27, 36, 32, 28, 33, 32, 34, 31, 34, 33, 31, 35, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 6, 11, 30, 12, 28, 10, 14, 30, 11, 16, 26, 17, 25, 29, 15, 27, 18, 13, 29, 20, 26, 19, 25, 16, 21, 22, 18, 22, 21, 23, 27, 23, 28, 24, 24, 31, 31, 33, 32, 33, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 8, 9, 18, 7, 10, 17, 8, 16, 15, 12, 14, 11, 13, 12, 24, 23, 16, 20, 15, 19, 26, 25, 20, 22, 19, 21, 36, 36, 28, 35, 26, 34, 30, 32, 29, 35, 27, 32, 33, 30, 31, 29, 31, 33, 34}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 8, 13, 30, 7, 8, 27, 9, 28, 11, 10, 29, 16, 27, 15, 25, 18, 26, 29, 18, 25, 16, 17, 26, 22, 30, 19, 21, 28, 20, 20, 23, 24, 22, 24, 23, 31, 31, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 7, 13, 28, 9, 18, 26, 12, 30, 9, 14, 30, 15, 11, 16, 18, 15, 29, 19, 27, 16, 20, 17, 20, 21, 22, 22, 25, 21, 24, 28, 23, 24, 23, 31, 31, 27, 33, 29, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 8, 17, 28, 13, 25, 27, 15, 16, 26, 12, 29, 11, 16, 30, 11, 18, 29, 14, 19, 27, 15, 20, 21, 26, 22, 21, 18, 22, 20, 24, 28, 23, 24, 23, 31, 31, 30, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 7, 9, 28, 14, 15, 26, 12, 29, 11, 13, 30, 10, 16, 18, 25, 17, 29, 19, 27, 21, 26, 21, 30, 18, 22, 17, 22, 20, 20, 24, 28, 23, 24, 23, 31, 31, 27, 33, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 34, 32, 35, 7, 14, 28, 13, 27, 29, 12, 30, 9, 15, 30, 10, 16, 18, 26, 17, 18, 25, 19, 27, 15, 20, 17, 22, 22, 21, 25, 20, 21, 24, 28, 23, 24, 23, 31, 31, 33, 29, 33, 32, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 31, 36, 33, 35, 32, 34, 7, 8, 26, 8, 12, 28, 10, 27, 11, 11, 12, 25, 17, 30, 15, 18, 14, 18, 30, 16, 29, 19, 28, 22, 27, 20, 26, 21, 20, 23, 24, 22, 24, 23, 31, 31, 29, 32, 33, 33, 32, 35, 34, 36, 36}",
      "{2, 3, 4, 32, 33, 31, 34, 35, 36, 7, 11, 14, 7, 8, 18, 15, 9, 13, 10, 17, 12, 19, 12, 16, 21, 24, 29, 20, 23, 16, 28, 23, 18, 24, 22, 25, 26, 22, 27, 30, 33, 32, 36, 36, 28, 35, 27, 34, 35, 34, 31, 33, 31, 32}",
      "{2, 3, 4, 32, 33, 34, 36, 31, 35, 7, 11, 14, 7, 8, 18, 15, 9, 13, 10, 17, 12, 19, 12, 16, 21, 24, 29, 20, 23, 16, 28, 23, 18, 24, 22, 25, 26, 22, 27, 30, 33, 32, 36, 36, 28, 35, 27, 34, 35, 34, 31, 33, 31, 32}",
  };
  return g;
}

inline const std::vector<std::string>& appendix_perm34() {
  static const std::vector<std::string> g = {
      "{9, 11, 17, 6, 10, 25, 8, 12, 31, 8, 9, 16, 21, 26, 27, 16, 27, 11, 23, 33, 23, 10, 12, 14, 18, 19, 24, 29, 22, 34, 16, 17, 29, 20, 22, 32, 20, 26, 30, 22, 31, 24, 34, 26, 28, 28, 33, 30, 32, 32, 34}",
      "{11, 13, 27, 14, 15, 20, 5, 29, 33, 6, 9, 23, 28, 31, 15, 31, 8, 11, 20, 25, 33, 17, 30, 12, 14, 30, 16, 16, 18, 14, 21, 24, 24, 18, 19, 29, 22, 27, 34, 22, 28, 26, 25, 32, 32, 26, 34, 28, 30, 32, 34}",
      "{9, 17, 31, 7, 18, 25, 8, 12, 26, 6, 8, 9, 13, 19, 26, 15, 19, 8, 11, 23, 21, 23, 29, 16, 17, 16, 29, 14, 27, 21, 25, 18, 33, 22, 24, 20, 34, 24, 34, 22, 30, 32, 32, 28, 28, 28, 31, 30, 33, 32, 34}",
      "{21, 23, 33, 14, 15, 19, 5, 27, 29, 6, 9, 25, 31, 34, 15, 31, 11, 19, 28, 18, 25, 28, 10, 30, 12, 14, 16, 23, 22, 29, 14, 17, 24, 26, 22, 26, 18, 33, 20, 20, 27, 22, 30, 24, 34, 32, 32, 28, 30, 32, 34}",
      "{9, 15, 19, 7, 10, 23, 12, 16, 21, 8, 17, 22, 6, 19, 31, 13, 23, 8, 11, 16, 17, 27, 12, 33, 14, 25, 24, 22, 32, 18, 29, 16, 25, 20, 20, 26, 28, 28, 22, 31, 34, 26, 34, 30, 30, 28, 33, 30, 32, 32, 34}",
      "{15, 17, 31, 13, 19, 33, 5, 8, 30, 8, 9, 25, 15, 32, 13, 25, 34, 8, 22, 29, 10, 27, 23, 26, 17, 22, 24, 14, 21, 26, 16, 16, 24, 16, 18, 20, 32, 20, 23, 34, 22, 30, 24, 28, 28, 28, 31, 30, 33, 32, 34}",
      "{9, 17, 21, 7, 18, 23, 5, 12, 16, 8, 13, 29, 6, 31, 23, 25, 11, 33, 20, 26, 10, 27, 12, 18, 14, 15, 24, 14, 25, 24, 21, 34, 20, 32, 19, 28, 28, 20, 31, 22, 26, 33, 24, 30, 30, 28, 29, 30, 32, 34, 34}",
      "{9, 15, 31, 13, 32, 33, 21, 24, 34, 6, 9, 27, 6, 15, 24, 19, 8, 11, 23, 18, 34, 10, 26, 32, 14, 17, 14, 26, 29, 28, 30, 16, 22, 22, 30, 20, 25, 20, 27, 20, 28, 22, 29, 24, 33, 26, 31, 28, 30, 32, 34}",
      "{11, 19, 25, 10, 13, 17, 8, 12, 31, 6, 8, 9, 15, 18, 33, 23, 29, 11, 24, 26, 30, 10, 25, 16, 27, 14, 16, 22, 23, 22, 32, 16, 19, 18, 26, 20, 34, 21, 34, 22, 31, 24, 30, 28, 28, 28, 32, 30, 33, 32, 34}",
      "{9, 15, 33, 6, 7, 22, 12, 27, 29, 8, 17, 23, 19, 25, 29, 13, 25, 8, 28, 16, 10, 17, 22, 34, 14, 15, 28, 31, 34, 14, 32, 18, 16, 27, 26, 24, 31, 20, 21, 24, 30, 22, 33, 24, 32, 26, 30, 28, 30, 32, 34}",
      "{9, 11, 19, 7, 13, 25, 17, 20, 29, 6, 9, 23, 15, 17, 31, 13, 31, 8, 21, 23, 29, 10, 16, 25, 21, 33, 14, 27, 30, 18, 32, 33, 16, 26, 27, 18, 32, 20, 34, 24, 22, 26, 34, 24, 30, 28, 28, 28, 30, 32, 34}",
      "{9, 13, 17, 6, 10, 25, 5, 12, 31, 6, 8, 9, 6, 19, 14, 32, 33, 23, 33, 34, 12, 29, 12, 22, 32, 19, 27, 27, 30, 18, 21, 26, 24, 26, 29, 22, 28, 20, 23, 20, 28, 22, 31, 24, 34, 26, 30, 28, 30, 32, 34}",
  };
  return g;
}

}  // namespace snark::fixture_data
