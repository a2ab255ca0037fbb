struct item {
    char name[20];
    int score;
};

int main()
{
    struct item list[50];
    int n, total = 0;
    int p;
    scanf("%d", &n);
    for (p = 0; p < n; p++) {
        scanf("%s %d", list[p].name, &list[p].score);
        total += list[p].score;
    }
    printf("%d %.2f\n", total, (double)total / n);
    return 0;
}
