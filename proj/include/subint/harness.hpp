#pragma once

#include "caps.hpp"
#include "decide_n.hpp"
#include "decide_vf.hpp"
#include "fmt.hpp"
#include "formula.hpp"
#include "io.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace subint
{

// Deterministic draws. Only the raw 64-bit engine output is used, so a seed
// gives the same corpus with any standard library.
class rng
{
    std::mt19937_64 _engine;

public:
    explicit rng( std::uint64_t seed ) : _engine{ seed } {}

    std::uint64_t below( std::uint64_t n ) { return n == 0 ? 0 : _engine() % n; }
    bool chance( std::uint64_t num, std::uint64_t den ) { return below( den ) < num; }
};

/// p, q, r, s, t, u, then a6, a7, ...
std::string atom_name( std::size_t i );

/// Random formula of connective depth at most `depth` over `atoms` letters.
/// About a quarter of the inner nodes are VF axiom instances, so theorems
/// are common.
prop_formula random_prop( rng& r, std::size_t atoms, std::size_t depth );
modal_formula random_modal( rng& r, std::size_t atoms, std::size_t depth );

/// Each bit on with probability num/den; `root` (if any) reaches every world.
relation random_relation( rng& r, std::size_t worlds, std::optional< world_id > root, std::uint64_t num = 1,
                          std::uint64_t den = 2 );

/// Rooted model on 1..max_worlds worlds (root 0). Every implication in
/// `indices` gets its own random relation with probability 1/2; the default
/// is total half the time. Edges appear with probability `density`.
prop_model random_prop_model( rng& r, std::size_t max_worlds, const std::vector< prop_formula >& indices,
                              const std::set< std::string >& atom_universe,
                              std::pair< std::uint64_t, std::uint64_t > density = { 1, 2 } );
modal_model random_modal_model( rng& r, std::size_t max_worlds, const std::vector< modal_formula >& indices,
                                const std::set< std::string >& atom_universe );

struct corpus_spec
{
    std::size_t atoms = 3;
    std::size_t depth = 3;
    std::size_t samples = 500;    // formula pairs per propositional axiom set
    std::uint64_t seed = 42;
    std::vector< std::string > axiom_sets{ "", "~~top" };
    std::vector< std::string > modal_axiom_sets{ "", "~[]bot" };
    std::size_t modal_samples = 150; // per modal axiom set
    std::size_t modal_atoms = 2;
    std::size_t modal_depth = 2;
    std::size_t models = 200;        // random L-models per axiom set
    std::size_t frames = 300;
    std::size_t transfer_pairs = 200;
    std::size_t max_worlds = 4;
    std::size_t closure_cap = 12;    // countermodels only for |Sub| up to this
    std::size_t search_goal_cap = 9; // proof search only for goals this small
    bool mutant = false;             // flip one decision (negative control)
    caps limits;
};

struct property_result
{
    std::string name;
    std::string axioms;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;
    std::size_t witnesses = 0;           // countermodels built, certificates found, ...
    std::vector< std::string > examples; // first few violations

    property_result( std::string name_, std::string axioms_ ) : name{ std::move( name_ ) }, axioms{ std::move( axioms_ ) } {}

    void violation( std::string what );
    [[nodiscard]] bool ok() const { return violations == 0; }
};

json to_json( const property_result& r );

inline const std::vector< std::string > suite_names{ "dp",        "slash",    "fmp",              "soundness",
                                                     "companion", "n-countermodel", "frame-conditions", "transfer" };

// Lazily built corpora and decision sessions shared by the suites.
class fuzz_session
{
public:
    struct prop_slice
    {
        std::string text;
        std::vector< prop_formula > axioms;
        std::vector< std::pair< prop_formula, prop_formula > > pairs;
        std::vector< prop_formula > formulas; // distinct members of the pairs, first-seen order
        std::unique_ptr< vf_decider > decider;
    };

    explicit fuzz_session( corpus_spec spec );

    [[nodiscard]] const corpus_spec& spec() const { return _spec; }
    std::vector< prop_slice >& prop_slices() { return _slices; }

    /// The decision the suites compare against; flipped on one formula in
    /// mutant mode.
    bool decided( prop_slice& s, const prop_formula& a );

    std::vector< property_result > run( const std::string& suite );
    std::vector< property_result > run_all();

private:
    corpus_spec _spec;
    std::vector< prop_slice > _slices;
    std::optional< prop_formula > _mutant_target;

    std::vector< property_result > disjunction_property();
    std::vector< property_result > slash_equivalence();
    std::vector< property_result > finite_frame_property();
    std::vector< property_result > soundness();
    std::vector< property_result > companion();
    std::vector< property_result > n_countermodels();
    std::vector< property_result > frame_conditions();
    std::vector< property_result > transfer();
};

/// Machine-readable summary; byte-identical for identical inputs.
json fuzz_report( const corpus_spec& spec, const std::vector< property_result >& results );

} // namespace subint
