"""settings.yaml lives here"""
