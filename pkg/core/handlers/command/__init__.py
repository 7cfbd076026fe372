from core.handlers.arguments import add_input
from core.handlers.command.check import (
    check_contractivity_handler,
    check_lemma2_handler,
    check_metric_handler,
    check_monoid_handler,
    configure_check,
    configure_lemma2,
)
from core.handlers.command.demo import configure_demo, demo_nondiscrete_handler
from core.handlers.command.joint import classes_handler, configure_joint, joint_handler
from core.handlers.command.matrix import configure_dist, dist_handler
from core.handlers.command.measure import (
    configure_contingency,
    configure_pair,
    configure_rank,
    contingency_handler,
    rank_handler,
    su_handler,
)
from core.handlers.command.runs import configure_runs, runs_handler
from core.handlers.dtos import CommandHandler

__all__ = ["handlers"]

handlers = [
    CommandHandler("su", su_handler, configure_pair, "SU and related entropies"),
    CommandHandler("rank", rank_handler, configure_rank, "rank columns by SU"),
    CommandHandler(
        "contingency", contingency_handler, configure_contingency, "count table"
    ),
    CommandHandler("dist", dist_handler, configure_dist, "distance matrix"),
    CommandHandler("joint", joint_handler, configure_joint, "append a joint column"),
    CommandHandler(
        "classes", classes_handler, add_input, "indiscernibility classes of columns"
    ),
    CommandHandler(
        "check-metric", check_metric_handler, configure_check, "metric axioms"
    ),
    CommandHandler(
        "check-monoid", check_monoid_handler, configure_check, "monoid laws of *"
    ),
    CommandHandler(
        "check-contractivity",
        check_contractivity_handler,
        configure_check,
        "contractivity of *",
    ),
    CommandHandler(
        "check-lemma2",
        check_lemma2_handler,
        configure_lemma2,
        "relative entropy properties",
    ),
    CommandHandler(
        "demo-nondiscrete",
        demo_nondiscrete_handler,
        configure_demo,
        "distances of nested indicators",
    ),
    CommandHandler("runs", runs_handler, configure_runs, "recorded check runs"),
]
