import hypothesis

hypothesis.settings.register_profile(
    "default",
    max_examples=30,
    deadline=None,  # jit compilation makes first-call timing meaningless
    suppress_health_check=[hypothesis.HealthCheck.too_slow,
                           hypothesis.HealthCheck.data_too_large],
)
hypothesis.settings.load_profile("default")
