#include "negaconv/families.hpp"

namespace negaconv {

// Reference tables exactly as printed, including the quantum rows whose two
// middle parameters appear in the opposite (memory, degree) order from the
// family statements, and the two rows listed below the stated i >= 2 range.

const std::vector<TableRowLit>& table1_rows() {
  static const std::vector<TableRowLit> rows = {
      {1, 5, 26, 23, 2, 1, 6},    {1, 5, 26, 21, 2, 1, 8},   {1, 5, 26, 19, 2, 1, 10},
      {1, 5, 26, 9, 2, 1, 20},    {1, 5, 26, 7, 2, 1, 22},   {1, 5, 26, 5, 2, 1, 24},
      {1, 9, 82, 63, 2, 1, 22},   {1, 9, 82, 53, 2, 1, 32},  {1, 9, 82, 43, 2, 1, 42},
      {1, 9, 82, 23, 2, 1, 62},   {1, 9, 82, 13, 2, 1, 72},
      {2, 3, 5, 3, 2, 1, 5},
      {2, 7, 25, 23, 2, 1, 5},    {2, 7, 25, 21, 2, 1, 7},   {2, 7, 25, 19, 2, 1, 9},
      {2, 7, 25, 17, 2, 1, 11},   {2, 7, 25, 15, 2, 1, 13},  {2, 7, 25, 13, 2, 1, 15},
      {2, 7, 25, 11, 2, 1, 17},   {2, 7, 25, 7, 2, 1, 21},
      {3, 5, 13, 10, 2, 1, 6},    {3, 5, 13, 8, 2, 1, 8},    {3, 5, 13, 6, 2, 1, 10},
      {3, 5, 13, 4, 2, 1, 12},
      {3, 7, 25, 16, 2, 1, 12},   {3, 7, 25, 10, 2, 1, 18},  {3, 7, 25, 4, 2, 1, 24},
      {3, 9, 41, 38, 2, 1, 6},    {3, 9, 41, 32, 2, 1, 12},  {3, 9, 41, 24, 2, 1, 20},
      {3, 9, 41, 4, 2, 1, 40},
      {3, 11, 61, 32, 2, 1, 32},  {3, 11, 61, 22, 2, 1, 42}, {3, 11, 61, 4, 2, 1, 60},
  };
  return rows;
}

const std::vector<TableRowLit>& table2_rows() {
  static const std::vector<TableRowLit> rows = {
      {4, 5, 26, 20, 2, 1, 6},
      {4, 9, 82, 80, 2, 1, 4},      {4, 9, 82, 76, 2, 1, 6},    {4, 9, 82, 72, 2, 1, 8},
      {4, 9, 82, 68, 2, 1, 10},
      {4, 13, 170, 168, 2, 1, 4},   {4, 13, 170, 164, 2, 1, 6}, {4, 13, 170, 160, 2, 1, 8},
      {4, 13, 170, 156, 2, 1, 10},  {4, 13, 170, 152, 2, 1, 12}, {4, 13, 170, 148, 2, 1, 14},
      {5, 7, 25, 21, 2, 1, 5},      {5, 7, 25, 17, 2, 1, 7},
      {5, 11, 61, 57, 2, 1, 5},     {5, 11, 61, 53, 2, 1, 7},   {5, 11, 61, 49, 2, 1, 9},
      {5, 11, 61, 45, 2, 1, 11},
      {5, 17, 145, 141, 2, 1, 5},   {5, 17, 145, 137, 2, 1, 7}, {5, 17, 145, 133, 2, 1, 9},
      {5, 17, 145, 129, 2, 1, 11},  {5, 17, 145, 125, 2, 1, 13}, {5, 17, 145, 121, 2, 1, 15},
      {5, 17, 145, 117, 2, 1, 17},
  };
  return rows;
}

}  // namespace negaconv
