"""Benchmark tools"""
