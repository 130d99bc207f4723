"""Wheel arithmetic, ray geometry, primality oracle, analyses and emitters"""
