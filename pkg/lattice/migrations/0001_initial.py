# Generated by Django 4.2.7

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('suite', models.CharField(choices=[('thm11', 'Volume lower bound on g_i'), ('corollary12', 'Specialized lower bounds on g_1, g_2, g_(d-2)'), ('bm-upper', 'Upper bound on g_i'), ('hibi', 'Hibi lower bound a_i >= a_1'), ('stanley-sym', 'Lattice surface of symmetric polytopes'), ('treutlein', 'Degree-2 h*-vector inequalities'), ('prop110', 'Euclidean surface minimum'), ('iso-cross', 'Isoperimetric ratio of cross-polytopes'), ('eq15', 'Trivial lattice surface bound'), ('series', 'h*-transforms against brute force'), ('pair-probe', 'Symmetric a_i + a_(d-i) probe')], max_length=20)),
                ('status', models.CharField(choices=[('pending', 'Pending'), ('holds', 'Holds'), ('violated', 'Violated'), ('failed', 'Failed')], default='pending', max_length=20)),
                ('seed', models.BigIntegerField(blank=True, null=True)),
                ('dim', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('box', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('corpus_size', models.PositiveIntegerField(default=0)),
                ('expression', models.TextField(blank=True)),
                ('violated_count', models.PositiveIntegerField(default=0)),
                ('report', models.JSONField(blank=True, default=list)),
                ('error', models.TextField(blank=True)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'db_table': 'verification_runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
