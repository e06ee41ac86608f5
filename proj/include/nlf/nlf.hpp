#ifndef NLF_NLF_HPP
#define NLF_NLF_HPP

#include <nlf/error.hpp>
#include <nlf/homology.hpp>
#include <nlf/cover.hpp>
#include <nlf/words.hpp>
#include <nlf/lifting.hpp>
#include <nlf/invariants.hpp>
#include <nlf/io.hpp>
#include <nlf/certificate.hpp>
#include <nlf/search.hpp>
#include <nlf/proof_chain.hpp>
#include <nlf/generate.hpp>

#endif // NLF_NLF_HPP
