#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftable/dataset.hpp"
#include "liftable/gamma.hpp"
#include "liftable/presentation.hpp"

namespace liftable {

/// A presentation of psi^-1(H) together with its bookkeeping.
struct SubgroupPresentation {
  /// Number of marked points k.
  int degree = 0;
  /// Simplified presentation; surviving generators are Schreier generators.
  Presentation presentation;
  /// Each surviving generator as a word in s1..s_{k-1}.
  std::vector<Word> generator_words;
  int index = 1;
  /// Schreier generators before and after removing transversal edges.
  std::size_t free_cover_generators = 0;
  std::size_t schreier_generators = 0;
  std::vector<std::string> tietze_script;
};

struct AnalyzeOptions {
  /// Presentations are skipped for subgroups of larger index.
  std::uint64_t max_presentation_index = 5040;
  LiftableOptions liftable;
  TietzeOptions tietze;
};

struct AnalysisReport {
  DataSet dataset;
  std::int64_t genus = 0;
  GammaVector gamma;
  StabilizerReport stab;
  std::optional<SubgroupPresentation> lmod;
  std::optional<SubgroupPresentation> clmod;
  std::optional<IrreducibleClass> classification;
  bool mod_equals_lmod = false;
  /// "hyperelliptic", "superelliptic", "doubled".
  std::vector<std::string> families;
};

/// Requires a valid spherical data set of genus >= 2.
AnalysisReport analyze(const DataSet& d, const AnalyzeOptions& opts = {});

/// psi^-1(H) presented by rewriting the sphere presentation and simplifying.  Index 1 returns
/// the sphere presentation itself.
SubgroupPresentation subgroup_presentation(int k, const PermGroup& h, const TietzeOptions& tietze = {});

enum class Provenance { built_in, user_supplied, derived, symbolic };
std::string_view to_string(Provenance p);

struct NormalizerSpec {
  Presentation presentation;
  /// q(G) for each lifted generator, as a residue mod n.
  std::vector<std::int64_t> conjugation_exponents;
  Provenance provenance = Provenance::symbolic;
  std::optional<GroupDescriptor> descriptor;
  std::vector<std::string> notes;
};

struct NormalizerPair {
  NormalizerSpec normalizer;
  NormalizerSpec centralizer;
};

/// Presentations of N(F) and C(F) as extensions of <F | F^n>.  With lift data the given
/// evaluations are used; otherwise built-in data where available, else symbolic exponents.
NormalizerPair normalizer_centralizer(const AnalysisReport& report, const std::optional<LiftData>& normalizer_lifts = {},
                                      const std::optional<LiftData>& centralizer_lifts = {});

/// Built-in N(F), C(F) for (2g+2, 0; (1,2), (1,2), (d,g+1), (-d,g+1)) with g even.
NormalizerPair doubled_top_order_normalizer(std::int64_t g);

/// The quotient presentations used there: <s1, s3, a13 | ...> and <s1, a13 | (s1*a13)^2>.
Presentation doubled_lmod_presentation();
Presentation doubled_clmod_presentation();
/// <a12, a13, d | d^2, [a12,d], [a13,d]> for the n1 != 2 doubled case.
Presentation doubled_pure_lmod_presentation();

using Matrix4 = std::array<std::array<std::int64_t, 4>, 4>;

struct MatrixCheck {
  std::string relation;
  bool holds = false;
};

struct ExponentReading {
  std::string name;
  std::string relation;
  /// Exponent e (mod 6) with relation = F^e, if any.
  std::optional<std::int64_t> computed;
  std::int64_t stated = 0;
  bool agrees = false;
};

struct MatrixVerification {
  std::vector<MatrixCheck> checks;
  std::vector<ExponentReading> exponents;
  bool all_relations_hold = false;
};

struct DoubledMatrices {
  Matrix4 f, g1, g2, g, g3;
  /// Skew form in the basis of the four curves: paired 2x2 blocks.
  Matrix4 form;
};
const DoubledMatrices& doubled_matrices();

MatrixVerification verify_doubled_matrices();

struct TableRow {
  int row = 0;
  DataSet dataset;
  GammaVector gamma;
  IrreducibleClass classification;
  std::string lmod_abelianization;
};

std::vector<DataSet> table_genus3_datasets();
std::vector<TableRow> table_genus3();
/// Aligned text with columns D_F, N(F), C(F), D_G.
std::string format_table(const std::vector<TableRow>& rows);

}  // namespace liftable
