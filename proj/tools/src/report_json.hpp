#pragma once

// JSON views of library results. Integers that can outgrow 53 bits are emitted
// as decimal strings; counters stay numeric.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pascalpell/contfrac.hpp"
#include "pascalpell/pascal.hpp"
#include "pascalpell/pell.hpp"
#include "pascalpell/search.hpp"
#include "pascalpell/sieve.hpp"

namespace pascalpell::cli {

using Json = nlohmann::ordered_json;

/// "pascalpell.<kind>/1"
std::string schema_id(const std::string& kind);

Json pair_json(const IntPair& p);
Json solution_json(const Solution& s);

/// Without timing the report depends only on (family, N, domain, sieves).
Json search_json(const SearchReport& r, bool with_timing);

Json unit_json(const Integer& D);
Json classes_json(const PellProblem& p, const std::vector<PellClassSeq>& classes);
Json paper_sequences_json(const PaperSequenceReport& r);

Json expansion_json(const CFExpansion& e);
Json convergents_json(const CFExpansion& e);
Json a1_json(const std::vector<A1Row>& rows);

Json table_json(const std::string& curve, const ResidueTable& t, bool with_pairs);
Json prune_json(const std::string& curve, const std::vector<ResidueTable>& tables);
Json prove_empty_json(const std::string& curve, const Polynomial& p, const std::vector<std::uint32_t>& moduli);

Json quasi_json(const EquationFamily& f, const QuasiSpec& spec, const std::vector<QuasiSolution>& rows);
std::string quasi_csv(const std::vector<QuasiSolution>& rows);

Json identity_json(const IdentityCheck& c);
Json identities_json(const std::vector<IdentityCheck>& checks);

Json curves_json();

}  // namespace pascalpell::cli
