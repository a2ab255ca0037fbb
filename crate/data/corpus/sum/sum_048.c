// total score of all students
struct rec {
    char name[20];
    int score;
};

int main()
{
    struct rec list[50];
    int num, total = 0;
    int idx;
    scanf("%d", &num);
    idx = 0;
    while (idx < num) {
        scanf("%s %d", list[idx].name, &list[idx].score);
        total += list[idx].score;
        idx++;
    }
    printf("%d %.2f\n", total, (double)total / num);
    return 0;
}
