"""Pancyclicity checks for [s,t]-graphs.

Graphs are ``Graph`` objects or graph6 text via ``Graph.from_graph6``.
Witnesses, verdicts, certificates and scan reports come back as dicts.
"""

from ._pancycle import (
    CertificateGap,
    CheckpointMismatch,
    Error,
    ExtensionFailed,
    Graph,
    HypothesesViolated,
    InputUnreadable,
    InvalidSets,
    MalformedRecord,
    OrderTooLarge,
    PreconditionViolated,
    blow_up,
    build_certificate,
    certify_pancyclic,
    check_hypotheses,
    check_st,
    cycle_spectrum,
    extend_c_tilde,
    find_c_tilde,
    find_dumbbell,
    find_switch,
    find_triangle,
    graphs,
    independence_number,
    is_connected,
    is_two_connected,
    min_degree,
    parse_graph6,
    probe_conjecture,
    recognize_c5_blowup,
    resume,
    scan,
    shortest_st_path,
    verify_certificate,
    verify_gadget_lemma,
    verify_main_theorem,
    verify_path_lemma,
    verify_triangle_lemma,
    write_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
