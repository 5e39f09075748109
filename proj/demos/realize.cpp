// Critical points of a few lists and the matrices that realize them.

#include <iostream>

#include "niep/io.hpp"
#include "niep/niep.hpp"

int main() {
  using namespace niep;

  const SpectrumList lists[] = {
      parse_spectrum("3, -1, -1"),
      parse_spectrum("1, 1, -2/3, -2/3, -2/3"),
      parse_spectrum("2, i, -i"),
      parse_spectrum("1, i, -1, -i"),
  };
  for (const auto& list : lists) {
    const auto report = verify_critical_realizability(list);
    print_human(std::cout, report);
    std::cout << "\n";
  }

  // A circulant's principal submatrices all share the critical points.
  const std::vector<Complex> row{Complex{1.0}, Complex{0.5}, Complex{0.25}, Complex{0.5}};
  const DenseMatrix c = circulant(row);
  const SpectrumList crit = critical_points(circulant_eigenvalues(row));
  std::cout << "circulant critical points " << format_list(crit) << "\n";
  for (std::size_t i = 1; i <= c.order(); ++i) {
    std::cout << "  C_(" << i << ") spectrum " << format_list(spectrum(principal_submatrix(c, i))) << "\n";
  }
}
