#pragma once

#include <json.hpp>

#include "lsg/bounds.hpp"
#include "lsg/coloring.hpp"
#include "lsg/embedding.hpp"
#include "lsg/hardcore.hpp"
#include "lsg/occupancy.hpp"
#include "lsg/sparsity.hpp"

namespace lsg {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const SparsityCertificate& c);
void to_json(Json& j, const IndependencePolynomial& p);
void to_json(Json& j, const HardCoreSampleStats& s);
void to_json(Json& j, const OccupancyCertificate& c);
void from_json(const Json& j, OccupancyCertificate& c);
void to_json(Json& j, const CheckVerdict& v);
void to_json(Json& j, const ZStarSolution& z);
void to_json(Json& j, const Lemma45Params& p);
void to_json(Json& j, const IndependentSetWitness& w);
void to_json(Json& j, const AsymptoticReference& a);
void to_json(Json& j, const DegreeReductionReport& r);
void to_json(Json& j, const CorrespondenceCover& c);
void from_json(const Json& j, CorrespondenceCover& c);
void to_json(Json& j, const DkpsReport& r);
void to_json(Json& j, const BknpArithmetic& a);
void to_json(Json& j, const BknpReport& r);
void to_json(Json& j, const ChiCEstimate& e);
void to_json(Json& j, const EmbeddingResult& r);
void to_json(Json& j, const EmbeddingCheck& c);

/// {"phi": {"v": colour id}}
Json coloring_json(const ColoringAssignment& phi);
ColoringAssignment coloring_from_json(const Json& j, std::size_t n);

/// Decimal rendering that round-trips exact values ("3/11").
std::string to_string(const Rational& q);
std::string to_string(const HighPrecision& x, int digits = 30);

}  // namespace lsg
