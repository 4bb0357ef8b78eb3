#include "gradalg/corpus.hpp"

#include "gradalg/error.hpp"

namespace gradalg {

namespace {

std::vector<CorpusFile> build() {
  std::vector<CorpusFile> files;
  auto add = [&](std::string name, std::string text) { files.push_back({std::move(name), std::move(text)}); };

  add("ex1.alg", R"(# polynomial ring k[x1,x2,x3]
algebra ex1
flavor polynomial
var x1 even
var x2 even
var x3 even
)");
  add("ex2.alg", R"(# exterior algebra on three generators
algebra ex2
flavor exterior
var x1 odd
var x2 odd
var x3 odd
)");
  add("ex3.alg", R"(# free associative algebra on three generators
algebra ex3
flavor free
var x1 even
var x2 even
var x3 even
)");
  add("ex4.alg", R"(# k[x1,x2,x3] modulo the square of the maximal ideal
algebra ex4
flavor polynomial
var x1 even
var x2 even
var x3 even
rel x1^2
rel x1*x2
rel x1*x3
rel x2^2
rel x2*x3
rel x3^2
)");
  add("ex5.alg", R"(algebra ex5
flavor free
var x1 even
var x2 even
var x3 even
rel x1*x2
rel x2*x3
)");
  add("ex6.alg", R"(algebra ex6
flavor polynomial
var x1 even
var x2 even
var x3 even
rel x1*x2
rel x2*x3
)");

  std::string cubes_comm, cubes_free;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const std::string line = "rel x" + std::to_string(i) + "*x" + std::to_string(j) + "*x" +
                                 std::to_string(k) + "\n";
        cubes_free += line;
        if (i <= j && j <= k) cubes_comm += line;
      }
  add("ex7.alg", "# commutative, cube of the maximal ideal is zero\n"
                 "algebra ex7\nflavor polynomial\nvar x1 even\nvar x2 even\nvar x3 even\n"
                 "rel x1*x2\nrel x2*x3\n" + cubes_comm);
  add("ex8.alg", "# noncommutative, cube of the augmentation ideal is zero\n"
                 "algebra ex8\nflavor free\nvar x1 even\nvar x2 even\nvar x3 even\n"
                 "rel x1*x2\nrel x2*x3\n" + cubes_free);
  add("ex9.alg", R"(algebra ex9
flavor free
var x1 even
var x2 even
rel x1*x2
rel x1^2
rel x2^3
rel x2^2*x1
)");
  add("dual_example.alg", R"(algebra dual_example
flavor free
var x1 even
var x2 even
rel x1*x2 + x2*x1 + x2^2
rel x1^2 + x1*x2
)");
  add("mixed.alg", R"(# k[x] tensor exterior(y)
algebra mixed
flavor graded
var x even
var y odd
)");
  add("sl3_ring.alg", R"(# exterior ring whose degree-one Lie algebra is the sl(3) periodization
algebra sl3_ring
flavor exterior
var x1 odd
var x2 odd
var y1 odd
var y2 odd
var y3 odd
rel 2*x1*y1 + y1*x2 + y2*y3
rel 2*x2*y2 + y2*x1 + y1*y3
rel x1*y3 + x2*y3 + y1*y2
)");
  add("anick.lie", R"(lie anick
var a odd
var b odd
rel [a,[a,[a,b]]]
rel [b,[b,[b,a]]]
)");
  add("sl3.lie", R"(# periodization of sl(3) with its Z/2 grading, generated in degree one
lie sl3
var h1 even
var h2 even
var a1 even
var a2 even
var a3 even
rel [h1,a1] + 2*[h2,a1]
rel [h2,a2] + 2*[h1,a2]
rel [h1,a3] - [h2,a3]
rel [h1,a3] - [a1,a2]
rel [h1,a2] + [a1,a3]
rel [h2,a1] - [a2,a3]
rel [h1,h2]
)");
  add("env_example.lie", R"(lie env_example
var a even
var b even
var c odd
rel [a,b] + [c,c]
rel [a,c] + [b,c]
)");
  add("k4.graph", R"(# complete graph on four vertices: 1 top left, 2 top right, 3 bottom right, 4 bottom left
graph k4
vertices 4
edge e1 1 2
edge e2 2 3
edge e3 3 4
edge e4 1 4
edge e5 1 3
edge e6 2 4
)");
  add("k4.flats", R"(flats k4
ground e1 e2 e3 e4 e5 e6
flat e1 e2 e5
flat e3 e4 e5
flat e1 e4 e6
flat e2 e3 e6
)");
  return files;
}

}  // namespace

const std::vector<CorpusFile>& corpus() {
  static const std::vector<CorpusFile> files = build();
  return files;
}

const std::string& corpus_text(std::string_view filename) {
  for (const auto& f : corpus())
    if (f.filename == filename) return f.text;
  fail(ErrorKind::InvalidInput, "no built-in file named '" + std::string(filename) + "'");
}

}  // namespace gradalg
