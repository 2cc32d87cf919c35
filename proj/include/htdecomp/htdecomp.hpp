#ifndef HTDECOMP_HTDECOMP_HPP
#define HTDECOMP_HTDECOMP_HPP

// Umbrella header pulling in the whole library.

#include <htdecomp/cli.hpp>
#include <htdecomp/cover.hpp>
#include <htdecomp/engine.hpp>
#include <htdecomp/gyo.hpp>
#include <htdecomp/htnode.hpp>
#include <htdecomp/hypergraph.hpp>
#include <htdecomp/index_set.hpp>
#include <htdecomp/parser.hpp>
#include <htdecomp/separation.hpp>
#include <htdecomp/serialize.hpp>
#include <htdecomp/validator.hpp>

#endif  // HTDECOMP_HTDECOMP_HPP
