#pragma once

#include "fpf/canonical_form.hpp"
#include "fpf/class_iso.hpp"
#include "fpf/decomposition.hpp"
#include "fpf/engine.hpp"
#include "fpf/equitable.hpp"
#include "fpf/errors.hpp"
#include "fpf/generators.hpp"
#include "fpf/graph.hpp"
#include "fpf/graph6.hpp"
#include "fpf/io.hpp"
#include "fpf/modular_decomposition.hpp"
#include "fpf/oracle.hpp"
#include "fpf/permutation.hpp"
#include "fpf/pfpf.hpp"
#include "fpf/reductions.hpp"
#include "fpf/small_canon.hpp"
#include "fpf/spider.hpp"
#include "fpf/tree_canon.hpp"
