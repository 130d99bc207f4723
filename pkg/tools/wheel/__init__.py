"""Wheel membership tools"""
