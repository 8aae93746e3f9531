"""Finite truncations of the enumeration gadgets and their verifiers."""

from .descriptors import (Cofinite, Finite, HorizonError, Progressions, SetDescriptor,
                          StagedFamily, limit_class, mover_count, parse_descriptor,
                          stage_restrict)
from .gadgets import (GadgetSpec, build_acds_gadget, build_gan_gadget, build_lk_gadget,
                      build_rtd_reduction, build_t1_gadget, build_tdplus_gadget,
                      build_xtd_family, build_xtdplus_gadget)
from .verify import (Refutation, VerifyReport, refute_positive_teaching_set, verify_acds,
                     verify_gan, verify_lk, verify_rtd_reduction, verify_t1, verify_tdplus,
                     verify_xtdplus)
