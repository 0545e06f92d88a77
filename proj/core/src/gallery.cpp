#include "courant/gallery.hpp"

#include "courant/chart.hpp"

namespace courant {

namespace {

GalleryEntry standard(std::size_t n) {
  std::string text = "chart rational";
  const auto chart = make_euclidean_chart(n);
  for (const auto& name : chart->names()) text += " " + name;
  text += "\n\nstructure E = standard\n";
  return {"standard-r" + std::to_string(n), "standard Courant algebroid TR^" + std::to_string(n) + " + T*R^" +
                                                std::to_string(n) + " with the Dorfman bracket",
          "the untwisted generalized tangent bundle", text};
}

std::vector<GalleryEntry> build() {
  std::vector<GalleryEntry> out;
  out.push_back(standard(3));
  out.push_back({"twisted-r3", "TR^3 + T*R^3 twisted by the closed 3-form (x^2 + y*z) dx^dy^dz",
                 "every top-degree form on R^3 is closed, so any coefficient gives a valid twist",
                 R"(chart rational x y z

form H 3 = {dx^dy^dz: x^2 + y*z}

structure E = twisted H
)"});
  out.push_back({"nonclosed-r4", "TR^4 + T*R^4 twisted by x1 dx2^dx3^dx4, which is not closed; build with --force",
                 "mutation test: dH = dx1^dx2^dx3^dx4, so Jacobi fails on a frame triple",
                 R"(chart rational x1 x2 x3 x4

form H 3 = {dx2^dx3^dx4: x1}

structure E = twisted H
)"});
  out.push_back({"so3-point", "so(3) over a point with the identity pairing, [g1, g2] = g3 and cyclic",
                 "a quadratic Lie algebra is a Courant algebroid over a point",
                 R"(chart rational

structure E = table
  labels g1 g2 g3
  row 1, 0, 0
  row 0, 1, 0
  row 0, 0, 1
  bracket g1 g2 = {g3: 1}
  bracket g2 g1 = {g3: -1}
  bracket g2 g3 = {g1: 1}
  bracket g3 g2 = {g1: -1}
  bracket g3 g1 = {g2: 1}
  bracket g1 g3 = {g2: -1}
end
)"});
  out.push_back({"merker-r2",
                 "standard R^2 matched with V = E + E* under the flat connection theta = d(xy) N, N e2 = e1, "
                 "plus a matched Dirac pair",
                 "the Merker-type flat example of a matched pair built from a flat metric connection",
                 R"(chart rational x y

structure T = standard

structure V = table
  labels e1 e2 f1 f2
  row 0, 0, 1, 0
  row 0, 0, 0, 1
  row 1, 0, 0, 0
  row 0, 1, 0, 0
end

# theta(d/dx) = y N, theta(d/dy) = x N, acting on E* by minus the transpose
connection theta = T on V
  entry d/dx e2 = {e1: y}
  entry d/dx f1 = {f2: -y}
  entry d/dy e2 = {e1: x}
  entry d/dy f1 = {f2: -x}
end

matched-pair P = T V theta 0

form omega 2 = {dx^dy: x*y}

dirac D1 = graph-two-form T omega

dirac D2 = graph-pairing-map V
  row 0, 1
  row -1, 0
end

matched-dirac M = P D1 D2
)"});
  out.push_back({"complex-c1", "complex standard structure on C^1 with H = 0, split into T^{1,0} and T^{0,1} parts",
                 "the holomorphic/antiholomorphic matched pair of a complex manifold",
                 R"(chart complex 1

form H 3 = 0

structure E = complex-standard H

matched-pair P = complex H
)"});
  out.push_back({"complex-c2-h21", "complex standard structure on C^2 twisted by H = dz1^dz2^dzb1 of type (2,1)",
                 "the (2,1) component enters the mixed maps of the complex matched pair; add omit-h21 to drop it",
                 R"(chart complex 2

form H 3 = {dz1^dz2^dzb1: 1}

structure E = complex-standard H

matched-pair P = complex H
)"});
  out.push_back({"regular-abelian-r2", "regular structure on R^2 with abelian G of rank 1 and R(d/dx, d/dy) = g1",
                 "the smallest regular example with non-zero curvature, used for the normalization audit",
                 R"(chart rational x y

regular A
  algebra g1
  row 1
  curvature d/dx d/dy = {g1: 1}
end
)"});
  out.push_back({"regular-so3",
                 "regular structure on R^3 with G = so(3), nabla_x = ad g1, nabla_y = ad g2, R(d/dx, d/dy) = g3, "
                 "H = dx^dy^dz",
                 "a non-abelian regular example whose connection is flat on F but not on G",
                 R"(chart rational x y z

form H 3 = {dx^dy^dz: 1}

regular S
  algebra g1 g2 g3
  row 1, 0, 0
  row 0, 1, 0
  row 0, 0, 1
  lie g1 g2 = {g3: 1}
  lie g2 g3 = {g1: 1}
  lie g3 g1 = {g2: 1}
  nabla d/dx g2 = {g3: 1}
  nabla d/dx g3 = {g2: -1}
  nabla d/dy g1 = {g3: -1}
  nabla d/dy g3 = {g1: 1}
  curvature d/dx d/dy = {g3: 1}
  twist H
end
)"});
  out.push_back({"dirac-graph-omega", "graph of the closed 2-form dx^dy in TR^3 + T*R^3",
                 "graphs of closed 2-forms are Dirac; the z dx^dy variant is not closed and fails",
                 R"(chart rational x y z

structure T = standard

form omega 2 = {dx^dy: 1}

dirac D = graph-two-form T omega
)"});
  out.push_back({"dirac-graph-pi", "graph of the Poisson bivector d/dx ^ d/dy in TR^2 + T*R^2",
                 "graphs of Poisson bivectors are Dirac",
                 R"(chart rational x y

structure T = standard

dirac D = graph-bivector T
  row 0, 1
  row -1, 0
end
)"});
  out.push_back({"port-hamiltonian",
                 "port-Hamiltonian graph on R^2 with V = (e1, f1), zero connection, omega = dx^dy and A = [[-2, 1]]",
                 "Dirac structures of port-Hamiltonian systems as graphs in TM + T*M + V + V*",
                 R"(chart rational x y

structure T = standard

structure V = table
  labels e1 f1
  row 0, 1
  row 1, 0
end

matched-pair P = T V 0 0

form omega 2 = {dx^dy: 1}

dirac D = port-hamiltonian P omega
  row -2, 1
end
)"});
  return out;
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = build();
  return entries;
}

std::optional<GalleryEntry> find_gallery(const std::string& name) {
  for (const auto& e : gallery_entries())
    if (e.name == name) return e;
  const std::string prefix = "standard-r";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() && name.size() <= prefix.size() + 2) {
    const auto digits = name.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos && (digits == "0" || digits[0] != '0'))
      return standard(std::stoul(digits));
  }
  return std::nullopt;
}

}  // namespace courant
