#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lopq::cli {

/// Left-aligned text table with a header row and dashed rule.
class Table {
 public:
  explicit Table(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  void print(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace lopq::cli
