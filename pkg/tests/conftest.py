import hypothesis

hypothesis.settings.register_profile("exact", deadline=None, max_examples=100)
hypothesis.settings.load_profile("exact")
