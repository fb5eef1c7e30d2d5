#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fgq/genmod.hpp"
#include "fgq/linear.hpp"

namespace fgq {

/// Table document: '#' comment lines, a line with the order n, then n rows of
/// n integers, and an optional trailing "point <k>" line.
struct TableDoc {
    CayleyTable table;
    std::optional<int> point;
};

TableDoc parse_table(std::istream& in);
TableDoc parse_table_text(const std::string& text);
TableDoc load_table(const std::string& path);  // parse_error / structural_error on IO failure
std::string print_table(const TableDoc& doc);

/// Form document: sections "group:" (table body), "f:" and "g:" (n images
/// each), "e:" (one integer). Section payloads may follow the header on the
/// same line or on subsequent lines.
ArithmeticForm parse_form(std::istream& in);
ArithmeticForm parse_form_text(const std::string& text);
ArithmeticForm load_form(const std::string& path);
std::string print_form(const ArithmeticForm& form);

/// Module document: sections "group:", "phi:", "psi:", "mu:", "nu:", "e:".
PointedModule parse_module(std::istream& in);
PointedModule parse_module_text(const std::string& text);
PointedModule load_module(const std::string& path);
std::string print_module(const PointedModule& pm);

}  // namespace fgq
